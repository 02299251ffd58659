#include "qconv/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qconv {

namespace {
constexpr double kLog2 = 0.6931471805599453;  // ln 2

double entropy_bits(double p) { return p > 0.0 ? -p * std::log(p) / kLog2 : 0.0; }
}  // namespace

double concurrence(const DensityOperator& rho) {
    if (rho.qubit_count() != 2) {
        throw std::invalid_argument("concurrence is defined for two qubits");
    }
    rho.clamped_eigenvalues();  // rejects non-PSD input beyond tolerance

    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    const Eigen::Matrix4cd spin_flipped = yy * rho.entries().conjugate() * yy;
    const Eigen::Matrix4cd product = rho.entries() * spin_flipped;

    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
    std::array<double, 4> lambdas{};
    for (int i = 0; i < 4; ++i) {
        lambdas[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double von_neumann_entropy(const DensityOperator& rho) {
    double s = 0.0;
    for (double ev : rho.clamped_eigenvalues()) s += entropy_bits(ev);
    return s;
}

double mutual_information(const DensityOperator& rho) {
    if (rho.qubit_count() != 2) {
        throw std::invalid_argument("mutual_information is defined for two qubits");
    }
    return von_neumann_entropy(partial_trace(rho, {1})) +
           von_neumann_entropy(partial_trace(rho, {2})) - von_neumann_entropy(rho);
}

Eigen::Matrix2cd MeasurementBasis::projector0() const {
    Eigen::Vector2cd v;
    v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
    return v * v.adjoint();
}

Eigen::Matrix2cd MeasurementBasis::projector1() const {
    return Eigen::Matrix2cd::Identity() - projector0();
}

namespace {

// p * S(rho_cond / p) summed over the two outcomes, with the unnormalized
// conditional 2x2 blocks computed by contracting the measured index.
double conditional_entropy(const Eigen::Matrix4cd& rho, MeasuredSide measured, double theta,
                           double phi) {
    const Complex a = std::cos(theta / 2.0);
    const Complex b = std::polar(std::sin(theta / 2.0), phi);
    const std::array<std::array<Complex, 2>, 2> vs = {{{a, b}, {-std::conj(b), std::conj(a)}}};

    double total = 0.0;
    for (const auto& v : vs) {
        // rho_c(i,j) = sum_kl conj(v_k) rho[(i,k),(j,l)] v_l     (measure B)
        //            = sum_kl conj(v_k) rho[(k,i),(l,j)] v_l     (measure A)
        Complex r00 = 0, r01 = 0, r11 = 0;
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
                const Complex w = std::conj(v[k]) * v[l];
                if (measured == MeasuredSide::B) {
                    r00 += w * rho(0 * 2 + k, 0 * 2 + l);
                    r01 += w * rho(0 * 2 + k, 1 * 2 + l);
                    r11 += w * rho(1 * 2 + k, 1 * 2 + l);
                } else {
                    r00 += w * rho(k * 2 + 0, l * 2 + 0);
                    r01 += w * rho(k * 2 + 0, l * 2 + 1);
                    r11 += w * rho(k * 2 + 1, l * 2 + 1);
                }
            }
        }
        const double p = r00.real() + r11.real();
        if (p < 1e-14) continue;
        const double half_gap =
            0.5 * std::sqrt(std::pow(r00.real() - r11.real(), 2) + 4.0 * std::norm(r01));
        const double lo = std::clamp(0.5 * p - half_gap, 0.0, p);
        const double hi = p - lo;
        total += entropy_bits(lo / p) * p + entropy_bits(hi / p) * p;
    }
    return total;
}

struct Minimum {
    double value;
    double theta;
    double phi;
};

Minimum nelder_mead(const Eigen::Matrix4cd& rho, MeasuredSide measured, Minimum start,
                    double step) {
    auto f = [&](double t, double p) { return conditional_entropy(rho, measured, t, p); };
    std::array<Minimum, 3> simplex = {start,
                                      {f(start.theta + step, start.phi), start.theta + step,
                                       start.phi},
                                      {f(start.theta, start.phi + step), start.theta,
                                       start.phi + step}};
    auto order = [&] {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Minimum& x, const Minimum& y) { return x.value < y.value; });
    };
    order();
    for (int iter = 0; iter < 400; ++iter) {
        const double extent = std::max(std::abs(simplex[0].theta - simplex[2].theta) +
                                           std::abs(simplex[0].phi - simplex[2].phi),
                                       std::abs(simplex[0].theta - simplex[1].theta) +
                                           std::abs(simplex[0].phi - simplex[1].phi));
        if (extent < 1e-7) break;
        const double ct = 0.5 * (simplex[0].theta + simplex[1].theta);
        const double cp = 0.5 * (simplex[0].phi + simplex[1].phi);
        const double rt = ct + (ct - simplex[2].theta);
        const double rp = cp + (cp - simplex[2].phi);
        const double fr = f(rt, rp);
        if (fr < simplex[0].value) {
            const double et = ct + 2.0 * (ct - simplex[2].theta);
            const double ep = cp + 2.0 * (cp - simplex[2].phi);
            const double fe = f(et, ep);
            simplex[2] = fe < fr ? Minimum{fe, et, ep} : Minimum{fr, rt, rp};
        } else if (fr < simplex[1].value) {
            simplex[2] = {fr, rt, rp};
        } else {
            const double kt = ct + 0.5 * (simplex[2].theta - ct);
            const double kp = cp + 0.5 * (simplex[2].phi - cp);
            const double fk = f(kt, kp);
            if (fk < simplex[2].value) {
                simplex[2] = {fk, kt, kp};
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex[i].theta = 0.5 * (simplex[i].theta + simplex[0].theta);
                    simplex[i].phi = 0.5 * (simplex[i].phi + simplex[0].phi);
                    simplex[i].value = f(simplex[i].theta, simplex[i].phi);
                }
            }
        }
        order();
    }
    return simplex[0];
}

}  // namespace

DiscordResult discord(const DensityOperator& rho, MeasuredSide measured) {
    if (rho.qubit_count() != 2) {
        throw std::invalid_argument("discord is defined for two qubits");
    }
    const double info = mutual_information(rho);
    const double unmeasured_entropy = von_neumann_entropy(
        partial_trace(rho, {measured == MeasuredSide::B ? 1 : 2}));

    const Eigen::Matrix4cd m = rho.entries();
    constexpr int kThetaSteps = 64;
    constexpr int kPhiSteps = 128;
    Minimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (int i = 0; i < kThetaSteps; ++i) {
        const double theta = M_PI * i / (kThetaSteps - 1);
        for (int j = 0; j < kPhiSteps; ++j) {
            const double phi = 2.0 * M_PI * j / kPhiSteps;
            const double value = conditional_entropy(m, measured, theta, phi);
            if (value < best.value) best = {value, theta, phi};
        }
    }
    best = nelder_mead(m, measured, best, M_PI / (kThetaSteps - 1));

    const double classical = unmeasured_entropy - best.value;
    double delta = info - classical;
    if (delta < 0.0 && delta > -1e-9) delta = 0.0;
    return {delta, {best.theta, best.phi}, info, classical};
}

}  // namespace qconv
