#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qconv/measures.hpp"
#include "qconv/states.hpp"

using namespace qconv;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(424242);
    return gen;
}

Eigen::MatrixXcd ginibre(int d) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng()), normal(rng()));
    }
    return g;
}

DensityOperator random_mixed(int n) {
    const int d = 1 << n;
    Eigen::MatrixXcd g = ginibre(d);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(n, std::move(rho));
}

Eigen::Matrix2cd random_unitary2() {
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(ginibre(2));
    return qr.householderQ();
}

}  // namespace

TEST_CASE("concurrence of named states") {
    CHECK(concurrence(DensityOperator::from_pure(states::make("PsiPlus"))) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(DensityOperator::from_pure(states::make("HPlus"))) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(concurrence(states::discord_point_output()) < 1e-9);
    CHECK_THROWS_AS(concurrence(DensityOperator::maximally_mixed(1)), std::invalid_argument);

    // Genuinely non-PSD input (negative eigenvalue far beyond the clamp).
    Eigen::Matrix4cd bad = Eigen::Matrix4cd::Identity() * 0.5;
    bad(3, 3) = -0.5;
    CHECK_THROWS_AS(concurrence(DensityOperator(2, bad)), std::domain_error);
}

TEST_CASE("concurrence is invariant under local unitaries") {
    for (int trial = 0; trial < 25; ++trial) {
        const auto rho = random_mixed(2);
        const double reference = concurrence(rho);
        auto rotated = apply_local(rho, LocalOperator::arbitrary("U", random_unitary2()), 1);
        rotated = apply_local(rotated, LocalOperator::arbitrary("V", random_unitary2()), 2);
        CHECK(concurrence(rotated) == doctest::Approx(reference).epsilon(1e-10));
    }
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(DensityOperator::from_pure(states::make("C4"))) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(von_neumann_entropy(DensityOperator::maximally_mixed(1)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    const auto reduced =
        partial_trace(DensityOperator::from_pure(states::make("PsiPlus")), {1});
    CHECK(von_neumann_entropy(reduced) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measurement basis projectors") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const MeasurementBasis basis{u(rng()) * M_PI, u(rng()) * 2 * M_PI};
        const auto p0 = basis.projector0();
        const auto p1 = basis.projector1();
        CHECK((p0 + p1 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((p0 * p0 - p0).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((p1 * p1 - p1).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("discord of product and Bell states") {
    const auto product = DensityOperator::from_pure(states::make("HPlus"));
    CHECK(discord(product, MeasuredSide::A).value == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(discord(product, MeasuredSide::B).value == doctest::Approx(0.0).epsilon(1e-9));

    const auto bell = DensityOperator::from_pure(states::make("PsiPlus"));
    const auto ab = discord(bell, MeasuredSide::B);
    CHECK(ab.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(ab.mutual_information == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ab.classical_correlation == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(discord(bell, MeasuredSide::A).value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("discord at the reported zero-entanglement point") {
    const auto rho = states::discord_point_output();
    const auto ab = discord(rho, MeasuredSide::B);
    // Converged projective value, frozen from an independent fine-grid +
    // polish computation: 0.08213334 bits.
    CHECK(ab.value == doctest::Approx(0.08213334).epsilon(2e-4));
    CHECK(std::abs(ab.value - 0.082) < 1e-3);
    CHECK(ab.mutual_information == doctest::Approx(0.79910832).epsilon(1e-6));
    CHECK(ab.classical_correlation == doctest::Approx(0.71697498).epsilon(1e-5));

    // Measuring the classical side of this classical-quantum state.
    const auto ba = discord(rho, MeasuredSide::A);
    CHECK(ba.value == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(std::isfinite(ab.value));
    CHECK(std::isfinite(ba.value));
    CHECK(std::abs(ab.value - ba.value) > 0.05);  // the asymmetry is real
}

TEST_CASE("discord result is consistent and non-negative on random states") {
    for (int trial = 0; trial < 60; ++trial) {
        const auto rho = random_mixed(2);
        for (auto side : {MeasuredSide::A, MeasuredSide::B}) {
            const auto result = discord(rho, side);
            CHECK(result.value >= -1e-9);
            CHECK(result.value ==
                  doctest::Approx(result.mutual_information - result.classical_correlation)
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("classical-quantum states carry no discord on the measured side") {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int trial = 0; trial < 10; ++trial) {
        const double p = u(rng());
        // Orthonormal pointer states on qubit 1, arbitrary states on qubit 2.
        const auto r0 = random_mixed(1);
        const auto r1 = random_mixed(1);
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m.block(0, 0, 2, 2) = p * r0.entries();
        m.block(2, 2, 2, 2) = (1 - p) * r1.entries();
        const DensityOperator cq(2, m);
        CHECK(discord(cq, MeasuredSide::A).value <= 1e-6);
    }
}
