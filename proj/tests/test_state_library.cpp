#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qconv/gate.hpp"
#include "qconv/states.hpp"

using namespace qconv;

TEST_CASE("C4 amplitudes match the printed ket") {
    const auto c4 = states::make("C4");
    CHECK(c4.amplitude(0b0000).real() == doctest::Approx(0.5));
    CHECK(c4.amplitude(0b0011).real() == doctest::Approx(0.5));
    CHECK(c4.amplitude(0b1100).real() == doctest::Approx(0.5));
    CHECK(c4.amplitude(0b1111).real() == doctest::Approx(-0.5));
    int nonzero = 0;
    for (int i = 0; i < 16; ++i) nonzero += std::abs(c4.amplitude(i)) > 1e-15;
    CHECK(nonzero == 4);
}

TEST_CASE("D4_2 is the balanced two-excitation superposition") {
    const auto d = states::make("D4_2");
    const double r6 = 1.0 / std::sqrt(6.0);
    for (int i : {0b0110, 0b1001, 0b0101, 0b1010, 0b0011, 0b1100}) {
        CHECK(d.amplitude(i).real() == doctest::Approx(r6).epsilon(1e-12));
    }
    CHECK(std::abs(d.amplitude(0b0000)) == 0.0);
    CHECK(std::abs(d.amplitude(0b0111)) == 0.0);
}

TEST_CASE("GHZ4 amplitudes") {
    const auto g = states::make("GHZ4");
    CHECK(g.amplitude(0b0000).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(g.amplitude(0b1111).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("all named states are normalized") {
    for (const auto& name : states::list_names()) {
        CHECK(states::make(name).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("unknown name is rejected") {
    CHECK_THROWS_AS(states::make("W4"), std::invalid_argument);
    CHECK_FALSE(states::is_known("W4"));
    CHECK(states::is_known("C4"));
}

TEST_CASE("primed Dicke state is locally equivalent to D4_2") {
    auto rotated = states::make("D4_2");
    rotated = apply_local(rotated, LocalOperator::sigma_z(), 1);
    rotated = apply_local(rotated, LocalOperator::sigma_x(), 2);
    rotated = apply_local(rotated, LocalOperator::sigma_zx(), 3);
    const Complex overlap = states::make("D4_2Prime").amplitudes().dot(rotated.amplitudes());
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify_identity pass and fail paths") {
    const auto ghz_output = apply_gate(states::make("C4"), find_preset("ghz")->canonical, {2, 3});
    CHECK(states::verify_identity("GHZ4", ghz_output.state).pass);

    // <C4|GHZ4> cancels exactly: the HHHH and VVVV contributions are 1/2
    // and -1/2 against 1/sqrt2 each.
    const auto report = states::verify_identity("C4", states::make("GHZ4"));
    CHECK_FALSE(report.pass);
    CHECK(report.fidelity == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(states::verify_identity("PsiPlus", states::make("PsiPlus")).pass);
    CHECK_THROWS_AS(states::verify_identity("PsiPlus", states::make("C4")),
                    std::invalid_argument);
}

TEST_CASE("mixed constructors used by the discord study") {
    const auto input = states::mixed_plus_input();
    CHECK(input.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(input.entries()(0, 0).real() == doctest::Approx(0.25));

    const auto target = states::discord_point_output();
    CHECK(target.trace() == doctest::Approx(1.0).epsilon(1e-12));
    // <HH| rho |HH> = (5/7) * |<H|phi>|^2 = (5/7)(4/5) = 4/7.
    CHECK(target.entries()(0, 0).real() == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
}
