#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qconv/gate.hpp"
#include "qconv/register.hpp"

namespace qconv {
namespace graph {

/// Vertices are qubits prepared in |+>; edges are CZ applications;
/// `locals` are applied after all edges.
struct GraphSpec {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, LocalOperator>> locals;
};

QubitRegister build_graph_state(const GraphSpec& spec);

/// CZ = |H><H|⊗1 + |V><V|⊗σz on a (1-based) vertex pair.
QubitRegister apply_cz(const QubitRegister& state, std::pair<int, int> pair);

enum class RewiringCase { star, keep, two_graphs, hybrid };

struct RewiringScenario {
    RewiringCase kind;
    std::string name;
    const ConversionPreset* preset;
    int star_center = 1;  // star case only
    /// Local corrections applied after the gate.
    std::vector<std::pair<int, LocalOperator>> corrections;
    /// CZ connections into the surrounding network: (ancilla, vertex),
    /// ancilla indices starting at 5.
    std::vector<std::pair<int, int>> ancilla_edges;
    /// Graph the corrected 4-qubit state must equal (empty for hybrid,
    /// whose target is the Dicke state, not a graph state).
    GraphSpec corrected_graph;
};

RewiringScenario make_scenario(RewiringCase kind, int star_center = 1);
RewiringScenario make_scenario(std::string_view name, int star_center = 1);
const std::vector<std::string>& scenario_names();

struct ScenarioStep {
    std::string name;
    std::string target;
    double fidelity;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<ScenarioStep> steps;
    double success_probability;
    bool success;  // every step fidelity >= 1 - 1e-9
};

/// Replay: canonical graph + locals -> |C4>, gate on qubits (2,3),
/// local corrections, CZ connections to ancilla |+> vertices. Each step
/// is checked against an independently constructed target.
ScenarioReport run_scenario(const RewiringScenario& scenario);

/// Max |<b| (U1⊗..⊗Un) |a>|² over the 6-element local Clifford set
/// {1, H, S, HS, SH, HSH} per qubit.
double max_local_clifford_fidelity(const QubitRegister& a, const QubitRegister& b);

}  // namespace graph
}  // namespace qconv
