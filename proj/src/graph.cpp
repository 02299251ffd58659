#include "qconv/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "qconv/states.hpp"

namespace qconv {
namespace graph {

namespace {
constexpr double kStepTol = 1e-9;

QubitRegister all_plus(int n) {
    Eigen::VectorXcd v =
        Eigen::VectorXcd::Constant(Eigen::Index{1} << n, 1.0 / std::sqrt(double(Eigen::Index{1} << n)));
    return QubitRegister(n, std::move(v), QubitRegister::Norm::keep);
}
}  // namespace

QubitRegister apply_cz(const QubitRegister& state, std::pair<int, int> pair) {
    const int n = state.qubit_count();
    auto [p, q] = pair;
    if (p == q) throw std::invalid_argument("CZ requires distinct vertices");
    if (p < 1 || p > n || q < 1 || q > n) throw std::out_of_range("CZ vertex outside 1..n");
    const Eigen::Index bp = Eigen::Index{1} << (n - p);
    const Eigen::Index bq = Eigen::Index{1} << (n - q);
    Eigen::VectorXcd out = state.amplitudes();
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if ((i & bp) && (i & bq)) out(i) = -out(i);
    }
    return QubitRegister(n, std::move(out), QubitRegister::Norm::keep);
}

QubitRegister build_graph_state(const GraphSpec& spec) {
    if (spec.vertex_count < 1 || spec.vertex_count > kMaxQubits) {
        throw std::out_of_range("graph capacity is 1..8 vertices");
    }
    std::set<std::pair<int, int>> seen;
    QubitRegister state = all_plus(spec.vertex_count);
    for (auto [p, q] : spec.edges) {
        if (p == q) throw std::invalid_argument("graph has a self-loop");
        if (!seen.insert(std::minmax(p, q)).second) {
            throw std::invalid_argument("graph has a duplicate edge");
        }
        state = apply_cz(state, {p, q});
    }
    for (const auto& [vertex, op] : spec.locals) {
        state = apply_local(state, op, vertex);
    }
    return state;
}

namespace {

GraphSpec line4_with_c4_locals() {
    const auto& h = LocalOperator::hadamard();
    return GraphSpec{4, {{1, 2}, {2, 3}, {3, 4}}, {{1, h}, {4, h}}};
}

GraphSpec star4(int center) {
    GraphSpec g{4, {}, {}};
    for (int v = 1; v <= 4; ++v) {
        if (v != center) g.edges.push_back({center, v});
    }
    return g;
}

LocalOperator h_then_x() {
    return LocalOperator::arbitrary(
        "HX", LocalOperator::hadamard().matrix * LocalOperator::sigma_x().matrix);
}

}  // namespace

RewiringScenario make_scenario(RewiringCase kind, int star_center) {
    const auto& h = LocalOperator::hadamard();
    RewiringScenario s;
    s.kind = kind;
    s.star_center = star_center;
    switch (kind) {
        case RewiringCase::star: {
            if (star_center < 1 || star_center > 4) {
                throw std::invalid_argument("star center must be in 1..4");
            }
            s.name = "star";
            s.preset = find_preset("ghz");
            for (int v = 1; v <= 4; ++v) {
                if (v != star_center) s.corrections.push_back({v, h});
            }
            s.corrected_graph = star4(star_center);
            const int outer_lo = star_center == 1 ? 2 : 1;
            const int outer_hi = star_center == 4 ? 3 : 4;
            s.ancilla_edges = {{5, outer_lo}, {6, outer_hi}};
            break;
        }
        case RewiringCase::keep:
            s.name = "keep";
            s.preset = find_preset("identity");
            s.corrections = {{1, h}, {4, h}};
            s.corrected_graph = GraphSpec{4, {{1, 2}, {2, 3}, {3, 4}}, {}};
            s.ancilla_edges = {{5, 1}, {6, 4}};
            break;
        case RewiringCase::two_graphs:
            s.name = "two_graphs";
            s.preset = find_preset("bell_pair");
            s.corrections = {{4, h_then_x()}, {3, h_then_x()}};
            s.corrected_graph = GraphSpec{4, {{1, 4}, {2, 3}}, {}};
            s.ancilla_edges = {{5, 1}, {6, 2}};
            break;
        case RewiringCase::hybrid:
            s.name = "hybrid";
            s.preset = find_preset("dicke");
            s.corrections = s.preset->correction;
            s.corrected_graph = GraphSpec{};  // Dicke target, not a graph state
            s.ancilla_edges = {{5, 1}, {6, 2}, {7, 3}, {8, 4}};
            break;
    }
    return s;
}

RewiringScenario make_scenario(std::string_view name, int star_center) {
    if (name == "star") return make_scenario(RewiringCase::star, star_center);
    if (name == "keep") return make_scenario(RewiringCase::keep, star_center);
    if (name == "two_graphs") return make_scenario(RewiringCase::two_graphs, star_center);
    if (name == "hybrid") return make_scenario(RewiringCase::hybrid, star_center);
    throw std::invalid_argument("unknown scenario: " + std::string(name));
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"star", "keep", "two_graphs", "hybrid"};
    return names;
}

ScenarioReport run_scenario(const RewiringScenario& scenario) {
    ScenarioReport report;
    report.scenario = scenario.name;
    report.success = true;
    auto record = [&](std::string name, std::string target, double f) {
        report.steps.push_back({std::move(name), std::move(target), f});
        if (f < 1.0 - kStepTol) report.success = false;
    };

    // Step 1: canonical line graph + H x 1 x 1 x H locals -> |C4>.
    QubitRegister state = build_graph_state(line4_with_c4_locals());
    record("prepare_cluster", "C4", fidelity(state, states::make("C4")));

    // Step 2: nonlocal gate on qubits 2,3.
    auto outcome = apply_gate(state, scenario.preset->canonical, {2, 3});
    state = outcome.state;
    report.success_probability = outcome.success_probability;
    record("apply_gate", scenario.preset->raw_target,
           fidelity(state, states::make(scenario.preset->raw_target)));

    // Local corrections to the scenario's graph-form target.
    for (const auto& [vertex, op] : scenario.corrections) {
        state = apply_local(state, op, vertex);
    }
    const bool has_graph_target = scenario.kind != RewiringCase::hybrid;
    const QubitRegister corrected_target = has_graph_target
                                               ? build_graph_state(scenario.corrected_graph)
                                               : states::make("D4_2");
    record("local_corrections", has_graph_target ? "graph_form" : "D4_2",
           fidelity(state, corrected_target));

    // Step 3: connect to the surrounding network through ancilla |+> vertices.
    const int n_anc = static_cast<int>(scenario.ancilla_edges.size());
    state = tensor(state, all_plus(n_anc));
    for (auto [ancilla, vertex] : scenario.ancilla_edges) {
        state = apply_cz(state, {ancilla, vertex});
    }

    QubitRegister expected = tensor(corrected_target, all_plus(n_anc));
    if (has_graph_target) {
        GraphSpec enlarged = scenario.corrected_graph;
        enlarged.vertex_count += n_anc;
        for (auto e : scenario.ancilla_edges) enlarged.edges.push_back(e);
        expected = build_graph_state(enlarged);
    } else {
        for (auto [ancilla, vertex] : scenario.ancilla_edges) {
            expected = apply_cz(expected, {ancilla, vertex});
        }
    }
    record("connect_network", "extended_network", fidelity(state, expected));
    return report;
}

double max_local_clifford_fidelity(const QubitRegister& a, const QubitRegister& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("states must have equal qubit counts");
    }
    const int n = a.qubit_count();

    const Eigen::Matrix2cd h = LocalOperator::hadamard().matrix;
    Eigen::Matrix2cd sgate;
    sgate << 1, 0, 0, Complex(0, 1);
    const std::array<Eigen::Matrix2cd, 6> cliffords = {
        Eigen::Matrix2cd::Identity(), h, sgate, h * sgate, sgate * h, h * sgate * h};

    double best = 0.0;
    std::vector<int> choice(n, 0);
    while (true) {
        QubitRegister mapped = a;
        for (int q = 0; q < n; ++q) {
            mapped = apply_local(mapped, LocalOperator::arbitrary("C", cliffords[choice[q]]),
                                 q + 1);
        }
        best = std::max(best, fidelity(b, mapped));
        int q = n - 1;
        while (q >= 0 && ++choice[q] == 6) choice[q--] = 0;
        if (q < 0) break;
    }
    return best;
}

}  // namespace graph
}  // namespace qconv
