// qconv command-line front end: parameter sweeps, named conversions,
// Monte Carlo campaigns, discord evaluation and graph-rewiring scenarios,
// with CSV/JSON outputs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconv/graph.hpp"
#include "qconv/measures.hpp"
#include "qconv/montecarlo.hpp"
#include "qconv/states.hpp"
#include "qconv/sweep.hpp"

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitFailure = 3;

constexpr const char* kSchema = "qconv.run_report.v1";

double to_radians(double value, bool degrees) {
    return degrees ? value * M_PI / 180.0 : value;
}

std::pair<int, int> parse_targets(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("targets must be a pair like 2,3");
    }
    return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
}

void emit(const json& report, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::invalid_argument("cannot write to " + output_path);
    out << report.dump(2) << '\n';
}

json finish_report(json report, Clock::time_point start) {
    report["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return report;
}

std::string g_command_echo;

struct SweepCli {
    qconv::sweep::SweepConfig cfg;
    std::string output_path;
    std::string format = "csv";
    std::string targets = "1,2";
    bool degrees = false;
};

int run_sweep_cmd(SweepCli& cli) {
    const auto start = Clock::now();
    cli.cfg.targets = parse_targets(cli.targets);
    cli.cfg.start = to_radians(cli.cfg.start, cli.degrees);
    cli.cfg.stop = to_radians(cli.cfg.stop, cli.degrees);
    const auto rows = qconv::sweep::run_sweep(cli.cfg);

    if (cli.format == "csv") {
        if (cli.output_path.empty()) {
            qconv::sweep::write_csv(std::cout, cli.cfg, rows);
        } else {
            std::ofstream out(cli.output_path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write to " + cli.output_path);
            qconv::sweep::write_csv(out, cli.cfg, rows);
        }
        return kExitOk;
    }

    json columns = json::array({"theta1", "theta2"});
    for (const auto& q : cli.cfg.quantities) columns.push_back(q);
    json data = json::array();
    for (const auto& row : rows) {
        json r = json::array({row.theta1, row.theta2});
        for (double v : row.values) {
            if (std::isnan(v)) {
                r.push_back(nullptr);
            } else {
                r.push_back(v);
            }
        }
        data.push_back(std::move(r));
    }
    json report = {{"schema", kSchema},
                   {"command", g_command_echo},
                   {"config",
                    {{"input", cli.cfg.input_state},
                     {"targets", {cli.cfg.targets.first, cli.cfg.targets.second}},
                     {"start", cli.cfg.start},
                     {"stop", cli.cfg.stop},
                     {"steps", cli.cfg.steps}}},
                   {"results", {{"columns", columns}, {"rows", data}}}};
    emit(finish_report(std::move(report), start), cli.output_path);
    return kExitOk;
}

json kraus_coefficients(const qconv::GateParams& p) {
    return {{"theta1", p.theta1},         {"theta2", p.theta2}, {"alpha1_minus_beta1", p.diag_h()},
            {"alpha2_minus_beta2", p.diag_v()}, {"mu1", p.mu1()},     {"mu2", p.mu2()}};
}

int run_convert_cmd(const std::string& preset_name, std::string input_state, std::string targets,
                    std::optional<double> theta1, std::optional<double> theta2, bool degrees,
                    const std::string& output_path) {
    const auto start = Clock::now();
    const auto* preset = qconv::find_preset(preset_name);
    if (preset == nullptr) throw std::invalid_argument("unknown preset: " + preset_name);
    if (input_state.empty()) input_state = preset->input_state;
    const auto target_pair = targets.empty() ? preset->targets : parse_targets(targets);
    qconv::GateParams params = preset->canonical;
    if (theta1) params.theta1 = to_radians(*theta1, degrees);
    if (theta2) params.theta2 = to_radians(*theta2, degrees);

    json results;
    if (input_state == "MixedPlus") {
        const auto out = qconv::apply_gate_mixed(qconv::states::mixed_plus_input(), params,
                                                 target_pair);
        results["success_probability"] = out.success_probability;
        if (preset->name == "discord_point") {
            results["fidelity"] =
                qconv::state_fidelity(out.state, qconv::states::discord_point_output());
            results["target"] = "discord_point_output";
        }
    } else {
        const auto out = qconv::apply_gate(qconv::states::make(input_state), params, target_pair);
        results["success_probability"] = out.success_probability;
        if (!preset->raw_target.empty()) {
            auto corrected = out.state;
            for (const auto& [q, op] : preset->correction) {
                corrected = qconv::apply_local(corrected, op, q);
            }
            results["fidelity"] =
                qconv::fidelity(corrected, qconv::states::make(preset->corrected_target));
            results["target"] = preset->corrected_target;
            results["raw_fidelity"] =
                qconv::fidelity(out.state, qconv::states::make(preset->raw_target));
            results["raw_target"] = preset->raw_target;
        }
    }
    results["nominal_success_probability"] = preset->nominal_success;
    results["kraus_coefficients"] = kraus_coefficients(params);

    json report = {{"schema", kSchema},
                   {"command", g_command_echo},
                   {"config",
                    {{"preset", preset_name},
                     {"input", input_state},
                     {"targets", {target_pair.first, target_pair.second}}}},
                   {"results", std::move(results)}};
    emit(finish_report(std::move(report), start), output_path);
    return kExitOk;
}

int run_montecarlo_cmd(const qconv::mc::McConfig& cfg, const std::string& samples_csv,
                       const std::string& output_path) {
    const auto start = Clock::now();
    const auto report = qconv::mc::run_monte_carlo(cfg);
    if (!samples_csv.empty()) {
        std::ofstream out(samples_csv, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write to " + samples_csv);
        out << "run,ps\n";
        const auto samples = qconv::mc::monte_carlo_samples(cfg);
        for (size_t k = 0; k < samples.size(); ++k) {
            out << k << ',' << qconv::sweep::format_double(samples[k]) << '\n';
        }
    }
    json doc = {{"schema", kSchema},
                {"command", g_command_echo},
                {"config",
                 {{"scenario", cfg.scenario},
                  {"runs", cfg.n_runs},
                  {"spread", cfg.spread}}},
                {"results",
                 {{"mean", report.mean},
                  {"stddev", report.stddev},
                  {"min", report.min},
                  {"max", report.max},
                  {"n_runs", report.n_runs}}},
                {"seed", cfg.seed}};
    emit(finish_report(std::move(doc), start), output_path);
    return kExitOk;
}

int run_discord_cmd(std::optional<double> theta1, std::optional<double> theta2,
                    const std::string& state_name, const std::string& measured, bool degrees,
                    const std::string& output_path) {
    const auto start = Clock::now();
    const auto side = measured == "A" ? qconv::MeasuredSide::A : qconv::MeasuredSide::B;
    if (measured != "A" && measured != "B") {
        throw std::invalid_argument("measured side must be A or B");
    }

    json config;
    json results;
    if (!state_name.empty()) {
        const auto state = qconv::states::make(state_name);
        if (state.qubit_count() != 2) {
            throw std::invalid_argument("discord needs a two-qubit state");
        }
        const auto result = qconv::discord(qconv::DensityOperator::from_pure(state), side);
        config = {{"state", state_name}, {"measured", measured}};
        results = {{"discord", result.value},
                   {"mutual_information", result.mutual_information},
                   {"classical_correlation", result.classical_correlation},
                   {"argmin_basis", {{"theta", result.basis.theta}, {"phi", result.basis.phi}}}};
    } else {
        if (!theta1 || !theta2) {
            throw std::invalid_argument("discord needs either --state or both --theta1/--theta2");
        }
        const qconv::GateParams params{to_radians(*theta1, degrees),
                                       to_radians(*theta2, degrees)};
        const auto out =
            qconv::apply_gate_mixed(qconv::states::mixed_plus_input(), params, {1, 2});
        const auto result = qconv::discord(out.state, side);
        config = {{"input", "MixedPlus"},
                  {"theta1", params.theta1},
                  {"theta2", params.theta2},
                  {"measured", measured}};
        results = {{"discord", result.value},
                   {"mutual_information", result.mutual_information},
                   {"classical_correlation", result.classical_correlation},
                   {"argmin_basis", {{"theta", result.basis.theta}, {"phi", result.basis.phi}}},
                   {"success_probability", out.success_probability}};
    }
    json report = {{"schema", kSchema},
                   {"command", g_command_echo},
                   {"config", std::move(config)},
                   {"results", std::move(results)}};
    emit(finish_report(std::move(report), start), output_path);
    return kExitOk;
}

int run_graph_cmd(const std::string& scenario_name, int center, const std::string& output_path) {
    const auto start = Clock::now();
    const auto scenario = qconv::graph::make_scenario(scenario_name, center);
    const auto report = qconv::graph::run_scenario(scenario);

    json steps = json::array();
    for (const auto& step : report.steps) {
        steps.push_back({{"name", step.name}, {"target", step.target},
                         {"fidelity", step.fidelity}});
    }
    json doc = {{"schema", kSchema},
                {"command", g_command_echo},
                {"config", {{"scenario", scenario_name}, {"center", center}}},
                {"results",
                 {{"steps", std::move(steps)},
                  {"success_probability", report.success_probability},
                  {"success", report.success}}}};
    emit(finish_report(std::move(doc), start), output_path);
    return report.success ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tunable linear-optical two-qubit conversion gate simulator"};
    app.require_subcommand(1);

    // sweep
    SweepCli sweep_cli;
    auto* sweep = app.add_subcommand("sweep", "Evaluate quantities on a theta1 x theta2 grid");
    sweep->add_option("--input", sweep_cli.cfg.input_state,
                      "Input state name (see list-states) or MixedPlus")
        ->capture_default_str();
    sweep->add_option("--targets", sweep_cli.targets, "Gate target pair, e.g. 2,3")
        ->capture_default_str();
    sweep->add_option("--start", sweep_cli.cfg.start, "Grid start angle")->capture_default_str();
    sweep->add_option("--stop", sweep_cli.cfg.stop, "Grid stop angle")->capture_default_str();
    sweep->add_option("--steps", sweep_cli.cfg.steps, "Grid steps per axis")
        ->capture_default_str();
    sweep->add_option("--quantity", sweep_cli.cfg.quantities,
                      "ps | concurrence | discord_AB | discord_BA | fidelity:<state>")
        ->required();
    sweep->add_option("--output", sweep_cli.output_path, "Output file (default stdout)");
    sweep->add_option("--format", sweep_cli.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_flag("--degrees", sweep_cli.degrees, "Interpret angles as degrees");

    // convert
    std::string preset_name, convert_input, convert_targets, convert_output;
    std::optional<double> convert_t1, convert_t2;
    bool convert_degrees = false;
    auto* convert = app.add_subcommand("convert", "Run a named conversion preset");
    convert->add_option("--preset", preset_name, "Preset name")->required();
    convert->add_option("--input", convert_input, "Input state (default: preset input)");
    convert->add_option("--targets", convert_targets, "Target pair (default: preset targets)");
    convert->add_option("--theta1", convert_t1, "Override theta1");
    convert->add_option("--theta2", convert_t2, "Override theta2");
    convert->add_flag("--degrees", convert_degrees, "Interpret angles as degrees");
    convert->add_option("--output", convert_output, "Output file (default stdout)");

    // montecarlo
    qconv::mc::McConfig mc_cfg;
    std::string mc_samples_csv, mc_output;
    auto* montecarlo = app.add_subcommand("montecarlo", "Angle-tolerance Monte Carlo campaign");
    montecarlo->add_option("--scenario", mc_cfg.scenario, "Scenario (preset) name")->required();
    montecarlo->add_option("--runs", mc_cfg.n_runs, "Number of runs")->capture_default_str();
    montecarlo->add_option("--spread", mc_cfg.spread, "Fractional half-width")
        ->capture_default_str();
    montecarlo->add_option("--seed", mc_cfg.seed, "RNG seed")->capture_default_str();
    montecarlo->add_option("--samples-csv", mc_samples_csv, "Also write raw samples as CSV");
    montecarlo->add_option("--output", mc_output, "Output file (default stdout)");

    // discord
    std::optional<double> discord_t1, discord_t2;
    std::string discord_state, discord_measured = "B", discord_output;
    bool discord_degrees = false;
    auto* discord_cmd = app.add_subcommand(
        "discord", "Discord of a named state or of the gate output on MixedPlus");
    discord_cmd->add_option("--theta1", discord_t1, "Gate theta1 (MixedPlus routed input)");
    discord_cmd->add_option("--theta2", discord_t2, "Gate theta2");
    discord_cmd->add_option("--state", discord_state, "Two-qubit named state (no gate)");
    discord_cmd->add_option("--measured", discord_measured, "Measured side, A or B")
        ->capture_default_str();
    discord_cmd->add_flag("--degrees", discord_degrees, "Interpret angles as degrees");
    discord_cmd->add_option("--output", discord_output, "Output file (default stdout)");

    // graph
    std::string graph_scenario;
    std::string graph_output;
    int graph_center = 1;
    auto* graph = app.add_subcommand("graph", "Replay a network rewiring scenario");
    graph->add_option("--scenario", graph_scenario, "star | keep | two_graphs | hybrid")
        ->required();
    graph->add_option("--center", graph_center, "Central node for the star scenario")
        ->capture_default_str();
    graph->add_option("--output", graph_output, "Output file (default stdout)");

    auto* list_states = app.add_subcommand("list-states", "List named states");
    auto* list_presets = app.add_subcommand("list-presets", "List conversion presets");

    for (int i = 1; i < argc; ++i) {
        if (i > 1) g_command_echo += ' ';
        g_command_echo += argv[i];
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sweep->parsed()) return run_sweep_cmd(sweep_cli);
        if (convert->parsed()) {
            return run_convert_cmd(preset_name, convert_input, convert_targets, convert_t1,
                                   convert_t2, convert_degrees, convert_output);
        }
        if (montecarlo->parsed()) return run_montecarlo_cmd(mc_cfg, mc_samples_csv, mc_output);
        if (discord_cmd->parsed()) {
            return run_discord_cmd(discord_t1, discord_t2, discord_state, discord_measured,
                                   discord_degrees, discord_output);
        }
        if (graph->parsed()) return run_graph_cmd(graph_scenario, graph_center, graph_output);
        if (list_states->parsed()) {
            for (const auto& name : qconv::states::list_names()) {
                std::cout << name << " (" << qconv::states::make(name).qubit_count()
                          << " qubits)\n";
            }
            std::cout << "MixedPlus (2 qubits, mixed; sweep/discord input only)\n";
            return kExitOk;
        }
        if (list_presets->parsed()) {
            for (const auto& p : qconv::presets()) {
                std::cout << p.name << ": theta1=" << qconv::sweep::format_angle(p.canonical.theta1)
                          << " theta2=" << qconv::sweep::format_angle(p.canonical.theta2)
                          << " ps=" << p.nominal_success << " input=" << p.input_state;
                if (!p.corrected_target.empty()) std::cout << " target=" << p.corrected_target;
                std::cout << '\n';
            }
            return kExitOk;
        }
    } catch (const qconv::ConversionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
