#include "qconv/gate.hpp"

#include <cmath>

#include "qconv/states.hpp"

namespace qconv {

namespace {
constexpr double kPsFloor = 1e-14;

double cos2(double theta) { return std::cos(2.0 * theta); }
double sin2(double theta) { return std::sin(2.0 * theta); }
}  // namespace

double GateParams::alpha(int l) const {
    const double c = cos2(l == 1 ? theta1 : theta2);
    return c * c;
}

double GateParams::beta(int l) const {
    const double s = sin2(l == 1 ? theta1 : theta2);
    return s * s;
}

double GateParams::mu1() const { return cos2(theta1) * cos2(theta2); }

double GateParams::mu2() const { return sin2(theta1) * sin2(theta2); }

Eigen::Matrix4cd build_kraus(const GateParams& p) {
    Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
    e(0, 0) = p.diag_h();
    e(3, 3) = p.diag_v();
    e(1, 1) = p.mu1();
    e(2, 1) = -p.mu2();
    e(2, 2) = p.mu1();
    e(1, 2) = -p.mu2();
    return e;
}

ConversionError::ConversionError(double ps)
    : std::runtime_error("conversion impossible at these angles (p_s = " + std::to_string(ps) +
                         ")"),
      ps_(ps) {}

namespace {

void check_targets(int n, std::pair<int, int> targets) {
    auto [t1, t2] = targets;
    if (t1 == t2) throw std::invalid_argument("gate targets must be distinct");
    if (t1 < 1 || t1 > n || t2 < 1 || t2 > n) {
        throw std::out_of_range("gate target outside 1..n");
    }
}

/// E0 embedded on the target pair, identity elsewhere.
Eigen::VectorXcd apply_embedded(const Eigen::Matrix4cd& e, const Eigen::VectorXcd& amps, int n,
                                std::pair<int, int> targets) {
    const Eigen::Index bit1 = Eigen::Index{1} << (n - targets.first);
    const Eigen::Index bit2 = Eigen::Index{1} << (n - targets.second);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amps.size());
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        if (amps(i) == Complex{0.0, 0.0}) continue;
        const int col = 2 * ((i & bit1) ? 1 : 0) + ((i & bit2) ? 1 : 0);
        const Eigen::Index base = i & ~bit1 & ~bit2;
        for (int row = 0; row < 4; ++row) {
            const Complex coeff = e(row, col);
            if (coeff == Complex{0.0, 0.0}) continue;
            Eigen::Index j = base;
            if (row & 2) j |= bit1;
            if (row & 1) j |= bit2;
            out(j) += coeff * amps(i);
        }
    }
    return out;
}

Eigen::MatrixXcd embedded_matrix(const Eigen::Matrix4cd& e, int n, std::pair<int, int> targets) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(d);
        basis(c) = 1.0;
        m.col(c) = apply_embedded(e, basis, n, targets);
    }
    return m;
}

}  // namespace

double success_probability(const QubitRegister& state, const GateParams& params,
                           std::pair<int, int> targets) {
    check_targets(state.qubit_count(), targets);
    return apply_embedded(build_kraus(params), state.amplitudes(), state.qubit_count(), targets)
        .squaredNorm();
}

double success_probability(const DensityOperator& rho, const GateParams& params,
                           std::pair<int, int> targets) {
    check_targets(rho.qubit_count(), targets);
    const Eigen::MatrixXcd e = embedded_matrix(build_kraus(params), rho.qubit_count(), targets);
    return (e * rho.entries() * e.adjoint()).trace().real();
}

GateOutcome apply_gate(const QubitRegister& state, const GateParams& params,
                       std::pair<int, int> targets) {
    check_targets(state.qubit_count(), targets);
    Eigen::VectorXcd out =
        apply_embedded(build_kraus(params), state.amplitudes(), state.qubit_count(), targets);
    const double ps = out.squaredNorm();
    if (ps < kPsFloor) throw ConversionError(ps);
    out /= std::sqrt(ps);
    return {QubitRegister(state.qubit_count(), std::move(out), QubitRegister::Norm::keep), ps};
}

MixedGateOutcome apply_gate_mixed(const DensityOperator& rho, const GateParams& params,
                                  std::pair<int, int> targets) {
    check_targets(rho.qubit_count(), targets);
    const Eigen::MatrixXcd e = embedded_matrix(build_kraus(params), rho.qubit_count(), targets);
    Eigen::MatrixXcd out = e * rho.entries() * e.adjoint();
    const double ps = out.trace().real();
    if (ps < kPsFloor) throw ConversionError(ps);
    return {DensityOperator(rho.qubit_count(), out / ps), ps};
}

GateOutcome prepare_from_plus(const GateParams& params) {
    return apply_gate(states::make("PlusPlus"), params, {1, 2});
}

QubitRegister general_cluster_output(const GateParams& p) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v(0b0000) = 0.5 * p.diag_h();
    v(0b1111) = -0.5 * p.diag_v();
    v(0b0011) = 0.5 * p.mu1();
    v(0b1100) = 0.5 * p.mu1();
    v(0b0101) = -0.5 * p.mu2();
    v(0b1010) = -0.5 * p.mu2();
    return QubitRegister(4, std::move(v), QubitRegister::Norm::keep);
}

namespace {

std::vector<ConversionPreset> make_presets() {
    const double pi = M_PI;
    // Table 1 caption: sin 2θ± = sqrt((5±√5)/10).
    const double theta_plus = 0.5 * std::asin(std::sqrt((5.0 + std::sqrt(5.0)) / 10.0));
    const double theta_minus = 0.5 * std::asin(std::sqrt((5.0 - std::sqrt(5.0)) / 10.0));

    const auto& sz = LocalOperator::sigma_z();
    const auto& sx = LocalOperator::sigma_x();
    const auto& szx = LocalOperator::sigma_zx();

    std::vector<ConversionPreset> out;
    out.push_back({"identity",
                   {0.0, 0.0},
                   {{pi / 2, pi / 2}},
                   {pi / 2, pi / 2},
                   1.0,
                   "C4",
                   {2, 3},
                   "C4",
                   "C4",
                   {}});
    out.push_back({"ghz",
                   {0.0, pi / 4},
                   {{pi / 2, pi / 4}, {pi / 4, 0.0}, {pi / 4, pi / 2}},
                   {pi / 2, pi / 4},
                   0.5,
                   "C4",
                   {2, 3},
                   "GHZ4",
                   "GHZ4",
                   {}});
    out.push_back({"dicke",
                   {theta_plus, theta_minus},
                   {{theta_minus, theta_plus}},
                   {theta_plus, theta_minus},
                   0.3,
                   "C4",
                   {2, 3},
                   "D4_2Prime",
                   "D4_2",
                   {{1, sz}, {2, sx}, {3, szx}}});
    out.push_back({"bell_pair",
                   {3 * pi / 8, pi / 8},
                   {{pi / 8, 3 * pi / 8}},
                   {3 * pi / 8, pi / 8},
                   0.25,
                   "C4",
                   {2, 3},
                   "PsiPlus_14_23",
                   "PsiPlus_14_23",
                   {}});
    out.push_back({"psi_plus_prep",
                   {pi / 8, 3 * pi / 8},
                   {{3 * pi / 8, pi / 8}},
                   {pi / 8, 3 * pi / 8},
                   0.5,
                   "PlusPlus",
                   {1, 2},
                   "PsiPlus",
                   "PsiPlus",
                   {}});
    out.push_back({"phi_minus_prep",
                   {0.0, pi / 4},
                   {{pi / 4, pi / 2}},
                   {pi / 4, pi / 2},
                   0.5,
                   "PlusPlus",
                   {1, 2},
                   "PhiMinus",
                   "PhiMinus",
                   {}});
    out.push_back({"discord_point",
                   {0.0, pi / 3},
                   {{pi / 3, 0.0}},
                   {0.0, pi / 3},
                   7.0 / 16.0,
                   "MixedPlus",
                   {1, 2},
                   "",
                   "",
                   {}});
    return out;
}

}  // namespace

const std::vector<ConversionPreset>& presets() {
    static const std::vector<ConversionPreset> all = make_presets();
    return all;
}

const ConversionPreset* find_preset(std::string_view name) {
    for (const auto& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace qconv
