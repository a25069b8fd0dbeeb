// Copyright 2026 The zpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the zpf library.
//
// Exit codes: 0 success, 2 invalid input, 3 domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zpf/errors.h"
#include "zpf/scenario.h"

namespace {

constexpr int EXIT_VALIDATION = 2;
constexpr int EXIT_DOMAIN = 3;

struct Output {
    std::string format;
    std::string out_path;
};

void add_output_options(CLI::App *cmd, Output &o, const std::string &default_format) {
    o.format = default_format;
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

void add_params_options(CLI::App *cmd, zpf::OscillatorParams &p) {
    cmd->add_option("--mass", p.mass, "Oscillator mass (natural units default 1)");
    cmd->add_option("--omega", p.omega, "Angular frequency (default 1)");
    cmd->add_option("--hbar", p.hbar, "Reduced Planck constant (default 1)");
}

void write_output(const Output &o, const std::string &text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        throw zpf::ValidationError("Cannot open output file '" + o.out_path + "'.");
    }
    f << text;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw zpf::ValidationError("Cannot open input file '" + path + "'.");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string render_report(const nlohmann::ordered_json &doc, const Output &o) {
    return o.format == "csv" ? zpf::dump_report_csv(doc) : zpf::dump_report_json(doc);
}

std::string render_table(const zpf::Table &t, const Output &o) {
    return o.format == "json" ? zpf::table_to_json(t) : zpf::table_to_csv(t);
}

zpf::OscillatorParams checked(const zpf::OscillatorParams &p) {
    if (!(p.mass > 0) || !(p.omega > 0) || !(p.hbar > 0)) {
        throw zpf::ValidationError("--mass, --omega and --hbar must be positive.");
    }
    return p;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Frame-relative measurement of oscillator and field energies"};
    app.require_subcommand(1);

    // figure1
    Output fig_out;
    double fig_xmin = -5, fig_xmax = 5;
    size_t fig_points = 401;
    zpf::OscillatorParams fig_params;
    auto *figure1 = app.add_subcommand("figure1", "Position densities of the four lowest eigenstates");
    figure1->add_option("--xmin", fig_xmin, "Grid start")->capture_default_str();
    figure1->add_option("--xmax", fig_xmax, "Grid end")->capture_default_str();
    figure1->add_option("--points", fig_points, "Grid points")->capture_default_str();
    add_params_options(figure1, fig_params);
    add_output_options(figure1, fig_out, "csv");

    // qubit measure
    Output qubit_out;
    zpf::QubitScenario qubit;
    auto *qubit_cmd = app.add_subcommand("qubit", "Spin-1/2 measurement against a Bloch-sphere frame");
    qubit_cmd->require_subcommand(1);
    auto *qubit_measure = qubit_cmd->add_subcommand("measure", "Outcome table for a state and frame");
    qubit_measure->add_option("--theta", qubit.theta, "State polar angle (rad)")->required();
    qubit_measure->add_option("--phi", qubit.phi, "State azimuth (rad)");
    qubit_measure->add_option("--frame-theta", qubit.frame_theta, "Frame polar angle (rad)")->required();
    qubit_measure->add_option("--frame-phi", qubit.frame_phi, "Frame azimuth (rad)");
    add_output_options(qubit_measure, qubit_out, "json");

    // classical demo
    Output classical_out;
    zpf::ClassicalScenario classical;
    auto *classical_cmd = app.add_subcommand("classical", "Detector riding a co-phased classical oscillator");
    classical_cmd->require_subcommand(1);
    auto *classical_demo = classical_cmd->add_subcommand("demo", "Observed energy for two amplitudes");
    classical_demo->add_option("--eta1", classical.eta1, "Particle amplitude")->required();
    classical_demo->add_option("--eta2", classical.eta2, "Detector amplitude")->required();
    classical_demo->add_option("--mass", classical.mass, "Particle mass")->capture_default_str();
    classical_demo->add_option("--omega", classical.omega, "Shared angular frequency")->capture_default_str();
    classical_demo->add_option("--phase", classical.phase, "Shared phase (rad)")->capture_default_str();
    add_output_options(classical_demo, classical_out, "json");

    // oscillator measure / density
    auto *osc_cmd = app.add_subcommand("oscillator", "Single quantum harmonic oscillator");
    osc_cmd->require_subcommand(1);
    Output osc_measure_out;
    zpf::OscillatorScenario osc;
    auto *osc_measure = osc_cmd->add_subcommand("measure", "Measure |eps_n> with the observable shifted by ell");
    osc_measure->add_option("--n", osc.level, "Energy level")->required();
    osc_measure->add_option("--ell", osc.ell, "Frame offset")->required();
    add_params_options(osc_measure, osc.params);
    add_output_options(osc_measure, osc_measure_out, "json");

    Output density_out;
    uint32_t density_level = 0;
    double density_xmin = -5, density_xmax = 5;
    size_t density_points = 401;
    zpf::OscillatorParams density_params;
    auto *osc_density = osc_cmd->add_subcommand("density", "Tabulate |<x|eps_n>|^2");
    osc_density->add_option("--n", density_level, "Energy level")->required();
    osc_density->add_option("--xmin", density_xmin, "Grid start")->capture_default_str();
    osc_density->add_option("--xmax", density_xmax, "Grid end")->capture_default_str();
    osc_density->add_option("--points", density_points, "Grid points")->capture_default_str();
    add_params_options(osc_density, density_params);
    add_output_options(osc_density, density_out, "csv");

    // field scenario
    auto *field_cmd = app.add_subcommand("field", "Multimode quantized field");
    field_cmd->require_subcommand(1);
    Output field_out;
    std::string field_config;
    auto *field_scenario = field_cmd->add_subcommand("scenario", "Run a field scenario file");
    field_scenario->add_option("--config", field_config, "Scenario JSON with kind \"field\"")->required();
    add_output_options(field_scenario, field_out, "json");

    // run: any scenario kind
    Output run_out;
    std::string run_config;
    auto *run_cmd = app.add_subcommand("run", "Run a scenario file of any kind");
    run_cmd->add_option("--config", run_config, "Scenario JSON of any kind")->required();
    add_output_options(run_cmd, run_out, "json");

    // sample
    Output sample_out;
    uint32_t sample_level = 0;
    size_t sample_count = 0;
    uint64_t sample_seed = 0;
    zpf::OscillatorParams sample_params;
    auto *sample_cmd = app.add_subcommand("sample", "Draw positions from an eigenstate density");
    sample_cmd->add_option("--n", sample_level, "Energy level")->required();
    sample_cmd->add_option("--count", sample_count, "Number of positions")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample_seed, "RNG seed")->required();
    add_params_options(sample_cmd, sample_params);
    add_output_options(sample_cmd, sample_out, "csv");

    // infer
    Output infer_out;
    std::string infer_input;
    uint32_t infer_max_level = 8;
    zpf::OscillatorParams infer_params;
    auto *infer_cmd = app.add_subcommand("infer", "Maximum-likelihood level of a sample file");
    infer_cmd->add_option("--input", infer_input, "Sample CSV written by `sample`")->required();
    infer_cmd->add_option("--max-level", infer_max_level, "Highest candidate level")->capture_default_str();
    add_params_options(infer_cmd, infer_params);
    add_output_options(infer_cmd, infer_out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_VALIDATION;
    }

    try {
        if (*figure1) {
            auto grid = zpf::Grid::make(fig_xmin, fig_xmax, fig_points);
            write_output(fig_out, render_table(zpf::emit_figure1(grid, checked(fig_params)), fig_out));
        } else if (*qubit_measure) {
            zpf::ScenarioConfig config{qubit};
            write_output(qubit_out, render_report(zpf::run_scenario(config).to_json(), qubit_out));
        } else if (*classical_demo) {
            zpf::ScenarioConfig config{classical};
            write_output(classical_out, render_report(zpf::run_scenario(config).to_json(), classical_out));
        } else if (*osc_measure) {
            checked(osc.params);
            zpf::ScenarioConfig config{osc};
            write_output(osc_measure_out, render_report(zpf::run_scenario(config).to_json(), osc_measure_out));
        } else if (*osc_density) {
            auto grid = zpf::Grid::make(density_xmin, density_xmax, density_points);
            write_output(
                density_out, render_table(zpf::density_table(density_level, grid, checked(density_params)), density_out));
        } else if (*field_scenario) {
            zpf::ScenarioConfig config = zpf::parse_scenario_text(read_file(field_config));
            if (config.kind() != "field") {
                throw zpf::ValidationError(
                    "kind: `field scenario` expects \"field\", got \"" + std::string(config.kind()) + "\".");
            }
            write_output(field_out, render_report(zpf::run_scenario(config).to_json(), field_out));
        } else if (*run_cmd) {
            zpf::ScenarioConfig config = zpf::parse_scenario_text(read_file(run_config));
            write_output(run_out, render_report(zpf::run_scenario(config).to_json(), run_out));
        } else if (*sample_cmd) {
            auto batch = zpf::sample_positions(
                zpf::EnergyEigenstate{sample_level}, sample_count, sample_seed, checked(sample_params));
            if (sample_out.format == "json") {
                nlohmann::ordered_json doc;
                doc["level_claimed"] = sample_level;
                doc["seed"] = sample_seed;
                doc["positions"] = batch.positions;
                write_output(sample_out, zpf::dump_report_json(doc));
            } else {
                std::ostringstream text;
                zpf::write_batch_csv(text, batch);
                write_output(sample_out, text.str());
            }
        } else if (*infer_cmd) {
            std::istringstream in(read_file(infer_input));
            auto batch = zpf::read_batch_csv(in);
            write_output(infer_out, render_report(zpf::infer_report(batch, infer_max_level, checked(infer_params)), infer_out));
        }
    } catch (const zpf::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const zpf::DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DOMAIN;
    }
    return 0;
}
