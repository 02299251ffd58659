#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qconv/gate.hpp"

namespace qconv {
namespace mc {

struct McConfig {
    std::string scenario;   // preset name
    int n_runs = 5000;
    double spread = 0.10;   // fractional half-width of the angle variation
    std::uint64_t seed = 0;
};

struct McReport {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    double min = 0.0;
    double max = 0.0;
    int n_runs = 0;
    std::uint64_t seed = 0;
};

/// Per-run success probabilities. Run k draws θ_l' uniformly from
/// [θ_l(1−spread), θ_l(1+spread)] using a stream derived from
/// (seed, k), so the sequence is schedule-independent.
std::vector<double> monte_carlo_samples(const McConfig& cfg);

McReport run_monte_carlo(const McConfig& cfg);

std::vector<std::string> scenario_names();

}  // namespace mc
}  // namespace qconv
