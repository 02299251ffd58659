#include "qconv/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qconv/states.hpp"

namespace qconv {
namespace mc {

namespace {

// splitmix64; fixed across platforms so seeded reports are portable.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct RunStream {
    std::uint64_t state;
    double next_unit() {  // [0, 1)
        state = mix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};

struct Evaluator {
    bool mixed;
    QubitRegister pure_input;
    DensityOperator mixed_input;
    std::pair<int, int> targets;

    double operator()(const GateParams& p) const {
        return mixed ? success_probability(mixed_input, p, targets)
                     : success_probability(pure_input, p, targets);
    }
};

Evaluator make_evaluator(const ConversionPreset& preset) {
    if (preset.input_state == "MixedPlus") {
        return {true, QubitRegister::basis("H"), states::mixed_plus_input(), preset.targets};
    }
    return {false, states::make(preset.input_state), DensityOperator::maximally_mixed(1),
            preset.targets};
}

}  // namespace

std::vector<double> monte_carlo_samples(const McConfig& cfg) {
    const ConversionPreset* preset = find_preset(cfg.scenario);
    if (preset == nullptr) {
        throw std::invalid_argument("unknown Monte Carlo scenario: " + cfg.scenario);
    }
    if (cfg.n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
    if (cfg.spread < 0.0 || cfg.spread >= 1.0) {
        throw std::invalid_argument("spread must lie in [0, 1)");
    }

    const Evaluator evaluate = make_evaluator(*preset);
    const GateParams nominal = preset->mc_angles;
    std::vector<double> samples(static_cast<size_t>(cfg.n_runs));
    for (int k = 0; k < cfg.n_runs; ++k) {
        RunStream stream{mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(k)))};
        const double u1 = 2.0 * stream.next_unit() - 1.0;
        const double u2 = 2.0 * stream.next_unit() - 1.0;
        const GateParams varied{nominal.theta1 * (1.0 + cfg.spread * u1),
                                nominal.theta2 * (1.0 + cfg.spread * u2)};
        samples[static_cast<size_t>(k)] = evaluate(varied);
    }
    return samples;
}

McReport run_monte_carlo(const McConfig& cfg) {
    const std::vector<double> samples = monte_carlo_samples(cfg);
    McReport report;
    report.n_runs = cfg.n_runs;
    report.seed = cfg.seed;
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    report.min = *lo;
    report.max = *hi;
    if (report.min == report.max) {  // degenerate distribution (e.g. spread 0)
        report.mean = report.min;
        report.stddev = 0.0;
        return report;
    }
    report.mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                  static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) ss += (s - report.mean) * (s - report.mean);
    report.stddev = samples.size() > 1
                        ? std::sqrt(ss / static_cast<double>(samples.size() - 1))
                        : 0.0;
    return report;
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& p : presets()) names.push_back(p.name);
    return names;
}

}  // namespace mc
}  // namespace qconv
