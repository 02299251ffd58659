#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qconv/density.hpp"
#include "qconv/register.hpp"

namespace qconv {
namespace states {

/// Construct a named state. Known names (see list_names):
///   Plus, Minus, Phi, PlusPlus, HPlus, PsiPlus, PhiPlus, PhiMinus,
///   C4, GHZ4, D4_2, D4_2Prime, PsiPlus_14_23.
QubitRegister make(std::string_view name);

bool is_known(std::string_view name);
const std::vector<std::string>& list_names();

struct FidelityReport {
    std::string name;
    double fidelity;
    bool pass;  // fidelity >= 1 - 1e-10
};

FidelityReport verify_identity(std::string_view name, const QubitRegister& candidate);

/// ½·1 ⊗ |+><+| — the product input of the discord study.
DensityOperator mixed_plus_input();

/// (5/7)|H><H|⊗|φ><φ| + (2/7)|V><V|⊗|+><+| with |φ> = (2|H>−|V>)/√5.
DensityOperator discord_point_output();

}  // namespace states
}  // namespace qconv
