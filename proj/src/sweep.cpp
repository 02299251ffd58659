#include "qconv/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "qconv/measures.hpp"
#include "qconv/states.hpp"

namespace qconv {
namespace sweep {

namespace {

constexpr double kPsFloor = 1e-14;

bool is_fidelity(const std::string& q) { return q.rfind("fidelity:", 0) == 0; }

bool two_qubit_input(const std::string& input) {
    return input == "MixedPlus" || states::make(input).qubit_count() == 2;
}

}  // namespace

void validate(const SweepConfig& cfg) {
    if (cfg.steps < 2) throw std::invalid_argument("sweep needs steps >= 2");
    if (cfg.quantities.empty()) throw std::invalid_argument("sweep needs at least one quantity");
    if (cfg.input_state != "MixedPlus" && !states::is_known(cfg.input_state)) {
        throw std::invalid_argument("unknown input state: " + cfg.input_state);
    }
    const int n = cfg.input_state == "MixedPlus"
                      ? 2
                      : states::make(cfg.input_state).qubit_count();
    auto [t1, t2] = cfg.targets;
    if (t1 == t2 || t1 < 1 || t1 > n || t2 < 1 || t2 > n) {
        throw std::invalid_argument("sweep targets must be a distinct pair within the register");
    }
    for (const auto& q : cfg.quantities) {
        if (q == "ps") continue;
        if (q == "concurrence" || q == "discord_AB" || q == "discord_BA") {
            if (!two_qubit_input(cfg.input_state)) {
                throw std::invalid_argument(q + " requires a two-qubit input state");
            }
            continue;
        }
        if (is_fidelity(q)) {
            const std::string target = q.substr(9);
            if (!states::is_known(target)) {
                throw std::invalid_argument("unknown fidelity target: " + target);
            }
            if (states::make(target).qubit_count() != n) {
                throw std::invalid_argument("fidelity target dimension mismatch: " + target);
            }
            continue;
        }
        throw std::invalid_argument("unknown quantity: " + q);
    }
}

double evaluate_quantity(const std::string& quantity, const std::string& input_state,
                         std::pair<int, int> targets, double theta1, double theta2) {
    const GateParams params{theta1, theta2};
    const bool mixed = input_state == "MixedPlus";
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (quantity == "ps") {
        return mixed ? success_probability(states::mixed_plus_input(), params, targets)
                     : success_probability(states::make(input_state), params, targets);
    }

    if (mixed) {
        const auto rho_in = states::mixed_plus_input();
        if (success_probability(rho_in, params, targets) < kPsFloor) return nan;
        const auto out = apply_gate_mixed(rho_in, params, targets);
        if (quantity == "concurrence") return concurrence(out.state);
        if (quantity == "discord_AB") return discord(out.state, MeasuredSide::B).value;
        if (quantity == "discord_BA") return discord(out.state, MeasuredSide::A).value;
        return state_fidelity(out.state,
                              DensityOperator::from_pure(states::make(quantity.substr(9))));
    }

    const QubitRegister input = states::make(input_state);
    if (success_probability(input, params, targets) < kPsFloor) return nan;
    const auto out = apply_gate(input, params, targets);
    if (quantity == "concurrence") return concurrence(DensityOperator::from_pure(out.state));
    if (quantity == "discord_AB") {
        return discord(DensityOperator::from_pure(out.state), MeasuredSide::B).value;
    }
    if (quantity == "discord_BA") {
        return discord(DensityOperator::from_pure(out.state), MeasuredSide::A).value;
    }
    return fidelity(out.state, states::make(quantity.substr(9)));
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const double step = (cfg.stop - cfg.start) / (cfg.steps - 1);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(cfg.steps) * static_cast<size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i) {
        const double t1 = cfg.start + i * step;
        for (int j = 0; j < cfg.steps; ++j) {
            const double t2 = cfg.start + j * step;
            SweepRow row{t1, t2, {}};
            row.values.reserve(cfg.quantities.size());
            for (const auto& q : cfg.quantities) {
                row.values.push_back(evaluate_quantity(q, cfg.input_state, cfg.targets, t1, t2));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    os << "theta1,theta2";
    for (const auto& q : cfg.quantities) os << ',' << q;
    os << '\n';
    for (const auto& row : rows) {
        os << format_angle(row.theta1) << ',' << format_angle(row.theta2);
        for (double v : row.values) os << ',' << format_double(v);
        os << '\n';
    }
}

}  // namespace sweep
}  // namespace qconv
