// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qconv/fock.hpp"
#include "qconv/gate.hpp"
#include "qconv/graph.hpp"
#include "qconv/measures.hpp"
#include "qconv/montecarlo.hpp"
#include "qconv/states.hpp"

using namespace qconv;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& summary) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, summary.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// --- criterion 1: Table 1 exactness -------------------------------------
void criterion_table1() {
    struct Row {
        const char* preset;
        double ps;
    };
    const Row rows[] = {{"identity", 1.0}, {"ghz", 0.5}, {"dicke", 0.3}, {"bell_pair", 0.25}};
    bool pass = true;
    std::string detail;
    const auto c4 = states::make("C4");
    for (const auto& row : rows) {
        const auto* preset = find_preset(row.preset);
        const auto out = apply_gate(c4, preset->canonical, {2, 3});
        auto corrected = out.state;
        for (const auto& [q, op] : preset->correction) corrected = apply_local(corrected, op, q);
        const double f = fidelity(corrected, states::make(preset->corrected_target));
        const bool ok = std::abs(out.success_probability - row.ps) <= 1e-10 && f >= 1.0 - 1e-10;
        pass = pass && ok;
        detail += std::string(row.preset) + " ps=" + fmt(out.success_probability) +
                  " F=" + fmt(f) + "; ";
    }
    report(1, pass, "Table 1 conversions from C4 — " + detail);
}

// --- criterion 2: Bell preparation ---------------------------------------
void criterion_bell_prep() {
    const auto psi = prepare_from_plus({M_PI / 8, 3 * M_PI / 8});
    const double f_psi = fidelity(psi.state, states::make("PsiPlus"));
    const auto phi = prepare_from_plus({0.0, M_PI / 4});
    const double f_phi = fidelity(phi.state, states::make("PhiMinus"));
    const bool pass = std::abs(psi.success_probability - 0.5) <= 1e-10 && f_psi >= 1.0 - 1e-10 &&
                      std::abs(phi.success_probability - 0.5) <= 1e-10 && f_phi >= 1.0 - 1e-10;
    report(2, pass,
           "Bell preparations from |++> — Psi+ ps=" + fmt(psi.success_probability) +
               " F=" + fmt(f_psi) + "; Phi- ps=" + fmt(phi.success_probability) +
               " F=" + fmt(f_phi));
}

// --- criterion 3: oracle equivalence --------------------------------------
void criterion_oracle() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            const double t1 = i * (M_PI / 2) / 49.0;
            const double t2 = j * (M_PI / 2) / 49.0;
            const double diff =
                (build_kraus({t1, t2}) - fock::extract_kraus(t1, t2)).cwiseAbs().maxCoeff();
            worst = std::max(worst, diff);
        }
    }
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> angle(0.0, M_PI / 2);
    for (int k = 0; k < 100; ++k) {
        const double t1 = angle(rng), t2 = angle(rng);
        const double diff =
            (build_kraus({t1, t2}) - fock::extract_kraus(t1, t2)).cwiseAbs().maxCoeff();
        worst = std::max(worst, diff);
    }
    report(3, worst <= 1e-12,
           "analytic vs physical-path operator on 50x50 grid + 100 random pairs — max |diff| = " +
               fmt(worst));
}

// --- criterion 4: discord point -------------------------------------------
void criterion_discord_point() {
    const auto out = apply_gate_mixed(states::mixed_plus_input(), {0.0, M_PI / 3}, {1, 2});
    const double conc = concurrence(out.state);
    const auto disc = discord(out.state, MeasuredSide::B);
    const double elementwise =
        (out.state.entries() - states::discord_point_output().entries()).cwiseAbs().maxCoeff();
    const bool pass = std::abs(out.success_probability - 0.4375) <= 1e-10 &&
                      conc <= 1e-9 && std::abs(disc.value - 0.082) <= 1e-3 &&
                      elementwise <= 1e-10;
    report(4, pass,
           "discord point (0, pi/3) — ps=" + fmt(out.success_probability) + " C=" + fmt(conc) +
               " delta(A|B)=" + fmt(disc.value) + " (base 2), |rho - target|max=" +
               fmt(elementwise));
}

// --- criterion 5: Monte Carlo ----------------------------------------------
void criterion_monte_carlo() {
    struct Anchor {
        const char* scenario;
        double mean;
        double std;
    };
    const Anchor anchors[] = {
        {"psi_plus_prep", 0.509, 0.010}, {"phi_minus_prep", 0.481, 0.021},
        {"discord_point", 0.446, 0.023}, {"ghz", 0.457, 0.027},
        {"identity", 0.909, 0.056},      {"bell_pair", 0.270, 0.017},
        {"dicke", 0.303, 0.013},
    };
    bool pass = true;
    std::string detail;
    for (const auto& anchor : anchors) {
        const auto rep = mc::run_monte_carlo({anchor.scenario, 5000, 0.10, 42});
        const bool ok = std::abs(rep.mean - anchor.mean) <= 3.0 * anchor.std;
        pass = pass && ok;
        detail += std::string(anchor.scenario) + "=" + fmt(rep.mean) + (ok ? " " : "(!) ");
        if (!ok) {
            std::printf("  distribution for %s: mean=%.4f std=%.4f min=%.4f max=%.4f "
                        "(reported %.3f +- %.3f)\n",
                        anchor.scenario, rep.mean, rep.stddev, rep.min, rep.max, anchor.mean,
                        anchor.std);
        }
    }
    report(5, pass, "Monte Carlo means within 3x reported std — " + detail);
}

// --- criterion 6: graph scenarios -------------------------------------------
void criterion_graph() {
    struct Expect {
        const char* name;
        double ps;
    };
    const Expect cases[] = {{"star", 0.5}, {"keep", 1.0}, {"two_graphs", 0.25}, {"hybrid", 0.3}};
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto rep = graph::run_scenario(graph::make_scenario(c.name));
        double min_f = 1.0;
        for (const auto& step : rep.steps) min_f = std::min(min_f, step.fidelity);
        const bool ok = rep.success && std::abs(rep.success_probability - c.ps) <= 1e-10 &&
                        min_f >= 1.0 - 1e-9;
        pass = pass && ok;
        detail += std::string(c.name) + "(ps=" + fmt(rep.success_probability) +
                  ",minF=" + fmt(min_f) + ") ";
    }
    const auto line = graph::build_graph_state({4, {{1, 2}, {2, 3}, {3, 4}}, {}});
    const auto star = graph::build_graph_state({4, {{1, 2}, {1, 3}, {1, 4}}, {}});
    const double best = graph::max_local_clifford_fidelity(line, star);
    const bool search_ok = best < 1.0 - 1e-6;
    pass = pass && search_ok;
    report(6, pass,
           "rewiring scenarios — " + detail + "; line->star local-Clifford max F = " + fmt(best));
}

// --- criterion 7: property suites -------------------------------------------
void criterion_properties() {
    std::mt19937_64 rng(2718281);
    std::normal_distribution<double> normal;

    // Discord non-negativity on 200 random two-qubit mixed states.
    bool discord_ok = true;
    double min_delta = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Matrix4cd g;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) g(i, j) = Complex(normal(rng), normal(rng));
        }
        Eigen::Matrix4cd m = g * g.adjoint();
        m /= m.trace().real();
        const DensityOperator rho(2, m);
        const auto side = (trial % 2 == 0) ? MeasuredSide::A : MeasuredSide::B;
        const double delta = discord(rho, side).value;
        min_delta = std::min(min_delta, delta);
        discord_ok = discord_ok && delta >= -1e-9;
    }

    // Concurrence invariance under random local unitaries.
    bool conc_ok = true;
    double worst_conc = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Matrix4cd g;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) g(i, j) = Complex(normal(rng), normal(rng));
        }
        Eigen::Matrix4cd m = g * g.adjoint();
        m /= m.trace().real();
        const DensityOperator rho(2, m);
        const double reference = concurrence(rho);
        Eigen::Matrix2cd u1, u2;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                u1(i, j) = Complex(normal(rng), normal(rng));
                u2(i, j) = Complex(normal(rng), normal(rng));
            }
        }
        const Eigen::Matrix2cd q1 = Eigen::HouseholderQR<Eigen::Matrix2cd>(u1).householderQ();
        const Eigen::Matrix2cd q2 = Eigen::HouseholderQR<Eigen::Matrix2cd>(u2).householderQ();
        auto rotated = apply_local(rho, LocalOperator::arbitrary("U", q1), 1);
        rotated = apply_local(rotated, LocalOperator::arbitrary("V", q2), 2);
        const double moved = std::abs(concurrence(rotated) - reference);
        worst_conc = std::max(worst_conc, moved);
        conc_ok = conc_ok && moved <= 1e-10;
    }

    // Fock bookkeeping on a 20x20 angle grid.
    bool fock_ok = true;
    for (int i = 0; i < 20 && fock_ok; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double t1 = i * (M_PI / 2) / 19.0;
            const double t2 = j * (M_PI / 2) / 19.0;
            const Eigen::Matrix4cd e = fock::extract_kraus(t1, t2);
            const Eigen::Matrix4cd gram = e.adjoint() * e;
            for (int col = 0; col < 4; ++col) {
                // Column norm is the coincidence probability; discarded
                // weight is rechecked against it inside extract_kraus's
                // pipeline by unitarity of the plates and PBS relabeling.
                if (gram(col, col).real() > 1.0 + 1e-12) fock_ok = false;
            }
            using fock::Pol;
            for (int col = 0; col < 4; ++col) {
                const Pol p1 = (col & 2) ? Pol::V : Pol::H;
                const Pol p2 = (col & 1) ? Pol::V : Pol::H;
                auto poly = fock::FockPolynomial::monomial({1, p1}, {2, p2});
                poly = fock::apply_waveplate(poly, 2, M_PI / 4);
                poly = fock::apply_pbs(poly, fock::PbsStage::first);
                poly = fock::apply_hwp(poly, 3, t2);
                poly = fock::apply_hwp(poly, 3, 0.0);
                poly = fock::apply_hwp(poly, 4, 0.0);
                poly = fock::apply_hwp(poly, 4, t1);
                poly = fock::apply_pbs(poly, fock::PbsStage::second);
                poly = fock::apply_waveplate(poly, 6, M_PI / 4);
                const auto coin = fock::postselect_one_per_output(poly);
                const double total = coin.amplitudes.squaredNorm() + coin.discarded_weight;
                if (std::abs(total - 1.0) > 1e-12) fock_ok = false;
            }
        }
    }

    // Seed-reproducible Monte Carlo reports.
    const auto a = mc::run_monte_carlo({"dicke", 1000, 0.10, 77});
    const auto b = mc::run_monte_carlo({"dicke", 1000, 0.10, 77});
    const bool mc_ok = a.mean == b.mean && a.stddev == b.stddev && a.min == b.min && a.max == b.max;

    const bool pass = discord_ok && conc_ok && fock_ok && mc_ok;
    report(7, pass,
           std::string("property suites — discord>=0 on 200 states (min ") + fmt(min_delta) +
               "), concurrence LU-invariant (max drift " + fmt(worst_conc) +
               "), Fock bookkeeping 20x20, seed-stable MC reports");
}

}  // namespace

int main() {
    criterion_table1();
    criterion_bell_prep();
    criterion_oracle();
    criterion_discord_point();
    criterion_monte_carlo();
    criterion_graph();
    criterion_properties();
    if (failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    }
    return failures;
}
