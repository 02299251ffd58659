#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qconv/density.hpp"
#include "qconv/register.hpp"

namespace qconv {

/// Wave-plate angle pair with the derived gate coefficients.
struct GateParams {
    double theta1 = 0.0;
    double theta2 = 0.0;

    double alpha(int l) const;  // cos²(2θ_l)
    double beta(int l) const;   // sin²(2θ_l)
    double mu1() const;         // cos2θ1 cos2θ2
    double mu2() const;         // sin2θ1 sin2θ2
    double diag_h() const { return alpha(1) - beta(1); }
    double diag_v() const { return alpha(2) - beta(2); }
};

/// E0 in the basis |HH>,|HV>,|VH>,|VV>:
///   (α1−β1)|HH><HH| + (α2−β2)|VV><VV|
///   + μ1|HV><HV| − μ2|VH><HV| + μ1|VH><VH| − μ2|HV><VH|.
Eigen::Matrix4cd build_kraus(const GateParams& params);

/// Thrown when the postselection weight vanishes at the given angles.
class ConversionError : public std::runtime_error {
  public:
    explicit ConversionError(double ps);
    double success_probability() const { return ps_; }

  private:
    double ps_;
};

struct GateOutcome {
    QubitRegister state;  // normalized
    double success_probability;
};

struct MixedGateOutcome {
    DensityOperator state;  // normalized
    double success_probability;
};

/// Embed E0 on the (1-based) target pair — first target is gate input
/// mode 1 — identity elsewhere; renormalize. Throws ConversionError when
/// p_s < 1e-14.
GateOutcome apply_gate(const QubitRegister& state, const GateParams& params,
                       std::pair<int, int> targets);

MixedGateOutcome apply_gate_mixed(const DensityOperator& rho, const GateParams& params,
                                  std::pair<int, int> targets);

/// p_s = <ψ|E†E|ψ> without the renormalization step (never throws).
double success_probability(const QubitRegister& state, const GateParams& params,
                           std::pair<int, int> targets);
double success_probability(const DensityOperator& rho, const GateParams& params,
                           std::pair<int, int> targets);

/// Gate on |+>|+>.
GateOutcome prepare_from_plus(const GateParams& params);

/// Unnormalized gate output on the four-qubit linear cluster state,
/// assembled term by term from the closed-form coefficients:
///   ½[(α1−β1)|HHHH> − (α2−β2)|VVVV> + μ1|HHVV> + μ1|VVHH>
///     − μ2|HVHV> − μ2|VHVH>].
QubitRegister general_cluster_output(const GateParams& params);

/// Named angle presets. `correction` lists per-qubit local operators
/// (applied to the full output register) taking the raw gate output to
/// `corrected_target`.
struct ConversionPreset {
    std::string name;
    GateParams canonical;
    std::vector<GateParams> alternates;
    GateParams mc_angles;  // all-nonzero pair used by the Monte Carlo suite
    double nominal_success;
    std::string input_state;  // named register, or "MixedPlus"
    std::pair<int, int> targets;
    std::string raw_target;        // state the bare gate output matches
    std::string corrected_target;  // after `correction` (equal to raw if none)
    std::vector<std::pair<int, LocalOperator>> correction;
};

const std::vector<ConversionPreset>& presets();
const ConversionPreset* find_preset(std::string_view name);

}  // namespace qconv
