#pragma once

#include "qconv/density.hpp"

namespace qconv {

/// Wootters concurrence of a normalized two-qubit state.
double concurrence(const DensityOperator& rho);

/// −Tr ρ log2 ρ. Zero eigenvalues contribute nothing.
double von_neumann_entropy(const DensityOperator& rho);

/// I(A,B) = S(ρ_A) + S(ρ_B) − S(ρ_AB) for a two-qubit state.
double mutual_information(const DensityOperator& rho);

enum class MeasuredSide { A, B };

/// Rank-1 projective basis on the Bloch sphere:
/// |v> = cos(θ/2)|H> + e^{iφ} sin(θ/2)|V>, Π0 = |v><v|, Π1 = 1 − Π0.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;
    Eigen::Matrix2cd projector0() const;
    Eigen::Matrix2cd projector1() const;
};

struct DiscordResult {
    double value;                   // δ = I − J, clamped at 0 from below
    MeasurementBasis basis;         // argmin of the conditional entropy
    double mutual_information;      // I(A,B)
    double classical_correlation;   // J
};

/// Quantum discord of a two-qubit state with respect to projective
/// measurements on `measured`. δ(A|B) measures B; δ(B|A) measures A.
/// Coarse 64x128 Bloch grid followed by a Nelder-Mead polish.
DiscordResult discord(const DensityOperator& rho, MeasuredSide measured);

}  // namespace qconv
