#pragma once

#include <compare>
#include <map>

#include "qconv/register.hpp"

namespace qconv {
namespace fock {

enum class Pol : int { H = 0, V = 1 };

/// Creation-operator index: spatial mode (1..6) plus polarization.
struct ModeLabel {
    int mode;
    Pol pol;
    auto operator<=>(const ModeLabel&) const = default;
};

/// Unordered pair of creation operators (total photon number 2).
/// Stored sorted so bosonic symmetry is automatic.
struct Monomial {
    ModeLabel a, b;
    static Monomial of(ModeLabel x, ModeLabel y);
    auto operator<=>(const Monomial&) const = default;
    bool doubly_occupied() const { return a == b; }
};

/// Linear combination of two-photon creation monomials applied to vacuum.
/// Coefficients are monomial coefficients: (a†)²|0> = √2 |2>, so a
/// doubly-occupied monomial with coefficient c has probability 2|c|².
class FockPolynomial {
  public:
    FockPolynomial() = default;
    static FockPolynomial monomial(ModeLabel x, ModeLabel y, Complex coeff = 1.0);

    void add(Monomial m, Complex coeff);
    const std::map<Monomial, Complex>& terms() const { return terms_; }
    Complex coeff(ModeLabel x, ModeLabel y) const;

    /// Sum of |c|² with the √2 double-occupation weight.
    double probability_weight() const;

  private:
    std::map<Monomial, Complex> terms_;
};

enum class PbsStage { first, second };

/// Mode relabeling of a polarizing beamsplitter. First: H1->H4, H2->H3,
/// V1->V3, V2->V4. Second: H3->H6, H4->H5, V3->V5, V4->V6.
FockPolynomial apply_pbs(const FockPolynomial& poly, PbsStage which);

/// Half-wave plate at angle theta on one spatial mode:
///   a†H -> cos2θ a†H + sin2θ a†V,   a†V -> sin2θ a†H − cos2θ a†V.
FockPolynomial apply_waveplate(const FockPolynomial& poly, int mode, double theta);

/// Waveplate restricted to the gate arms (modes 3 and 4).
FockPolynomial apply_hwp(const FockPolynomial& poly, int mode, double theta);

struct Coincidence {
    /// Amplitudes on |HH>,|HV>,|VH>,|VV> over output modes (5,6).
    Eigen::Vector4cd amplitudes;
    /// Probability weight of everything that fails the coincidence.
    double discarded_weight;
};

/// Keep only monomials with exactly one photon in mode 5 and one in mode 6.
Coincidence postselect_one_per_output(const FockPolynomial& poly);

/// Run the four basis inputs on modes 1,2 through the physical gate path
/// and assemble the effective two-qubit operator:
///
///   flip(2) -> PBS1 -> [mode 3: HWP(θ2), HWP(0)] [mode 4: HWP(0), HWP(θ1)]
///           -> PBS2 -> flip(6) -> postselect,
///
/// where flip(m) is a fixed plate at π/4. The tunable θ1 plate sits in
/// mode 4 and θ2 in mode 3; the fixed companions make each arm a proper
/// polarization rotation and route the coincidence block onto the
/// |HH>,|HV>,|VH>,|VV> labels of the analytic operator.
Eigen::Matrix4cd extract_kraus(double theta1, double theta2);

}  // namespace fock
}  // namespace qconv
