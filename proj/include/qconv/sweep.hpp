#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qconv/gate.hpp"

namespace qconv {
namespace sweep {

/// Quantities: "ps", "concurrence", "discord_AB", "discord_BA",
/// "fidelity:<state>". Concurrence and discord require a two-qubit
/// context (PlusPlus or MixedPlus input).
struct SweepConfig {
    std::string input_state = "PlusPlus";
    std::pair<int, int> targets = {1, 2};
    double start = 0.0;
    double stop = 1.5707963267948966;  // pi/2
    int steps = 201;
    std::vector<std::string> quantities;
};

struct SweepRow {
    double theta1;
    double theta2;
    std::vector<double> values;
};

/// Validate config (known input, known quantities, steps >= 2). Throws
/// std::invalid_argument with a message suitable for the CLI.
void validate(const SweepConfig& cfg);

/// Evaluate one quantity at one grid point. Rows where the gate output
/// vanishes (p_s < 1e-14) yield NaN for state-dependent quantities.
double evaluate_quantity(const std::string& quantity, const std::string& input_state,
                         std::pair<int, int> targets, double theta1, double theta2);

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Shortest round-trip decimal representation.
std::string format_double(double v);
/// 12 significant digits, used for the angle columns.
std::string format_angle(double v);

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows);

}  // namespace sweep
}  // namespace qconv
