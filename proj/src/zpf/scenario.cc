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

#include "zpf/scenario.h"

#include <cmath>
#include <limits>
#include <set>

#include "zpf/bloch.h"
#include "zpf/classical.h"
#include "zpf/errors.h"
#include "zpf/field.h"
#include "zpf/oscillator.h"

namespace zpf {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view KIND_NAMES[] = {"qubit", "classical", "oscillator", "field", "sample"};

// Typed access to one JSON object, tracking which keys were consumed so
// leftovers can be rejected.
class ObjectReader {
   public:
    ObjectReader(const ordered_json &node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            throw ValidationError(path_ + ": expected an object.");
        }
    }

    bool has(const std::string &key) const {
        return node_.contains(key);
    }

    const ordered_json &raw(const std::string &key) {
        if (!node_.contains(key)) {
            throw ValidationError(field(key) + ": required key is missing.");
        }
        seen_.insert(key);
        return node_.at(key);
    }

    double real(const std::string &key) {
        return as_real(raw(key), field(key));
    }
    double real_or(const std::string &key, double fallback) {
        return has(key) ? real(key) : fallback;
    }

    uint64_t unsigned_int(const std::string &key, uint64_t max = std::numeric_limits<uint64_t>::max()) {
        return as_unsigned(raw(key), field(key), max);
    }

    std::vector<uint32_t> level_list(const std::string &key) {
        const ordered_json &arr = raw(key);
        if (!arr.is_array()) {
            throw ValidationError(field(key) + ": expected an array of non-negative integers.");
        }
        std::vector<uint32_t> result;
        result.reserve(arr.size());
        for (size_t k = 0; k < arr.size(); k++) {
            result.push_back(uint32_t(
                as_unsigned(arr[k], field(key) + "[" + std::to_string(k) + "]", std::numeric_limits<uint32_t>::max())));
        }
        return result;
    }

    std::string field(const std::string &key) const {
        return path_ + "." + key;
    }

    void finish() const {
        for (const auto &[key, value] : node_.items()) {
            if (!seen_.contains(key)) {
                throw ValidationError(field(key) + ": unknown key.");
            }
        }
    }

    static double as_real(const ordered_json &v, const std::string &where) {
        if (!v.is_number()) {
            throw ValidationError(where + ": expected a number.");
        }
        double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ValidationError(where + ": expected a finite number.");
        }
        return d;
    }

    static uint64_t as_unsigned(const ordered_json &v, const std::string &where, uint64_t max) {
        if (!v.is_number_unsigned()) {
            throw ValidationError(where + ": expected a non-negative integer.");
        }
        uint64_t u = v.get<uint64_t>();
        if (u > max) {
            throw ValidationError(where + ": value " + std::to_string(u) + " is too large.");
        }
        return u;
    }

   private:
    const ordered_json &node_;
    std::string path_;
    std::set<std::string> seen_;
};

OscillatorParams read_params(const ordered_json &node, const std::string &path) {
    ObjectReader r(node, path);
    OscillatorParams p;
    p.mass = r.real_or("mass", 1.0);
    p.omega = r.real_or("omega", 1.0);
    p.hbar = r.real_or("hbar", 1.0);
    r.finish();
    for (auto [value, name] : {std::pair{p.mass, "mass"}, {p.omega, "omega"}, {p.hbar, "hbar"}}) {
        if (value <= 0) {
            throw ValidationError(path + "." + name + ": must be positive.");
        }
    }
    return p;
}

OscillatorParams optional_params(ObjectReader &r, const std::string &key) {
    return r.has(key) ? read_params(r.raw(key), r.field(key)) : OscillatorParams{};
}

ordered_json params_json(const OscillatorParams &p) {
    ordered_json j;
    j["mass"] = p.mass;
    j["omega"] = p.omega;
    j["hbar"] = p.hbar;
    return j;
}

ordered_json vector_json(const BlochVector &v) {
    return ordered_json::array({v.nx(), v.ny(), v.nz()});
}

ordered_json record_json(const MeasurementRecord &rec) {
    ordered_json j;
    j["frame_offset"] = rec.frame.ell;
    j["in_support"] = rec.in_support;
    j["eigenvalue_outcome"] = rec.eigenvalue_outcome.has_value() ? ordered_json(*rec.eigenvalue_outcome) : ordered_json();
    j["lambda_outcome"] = rec.lambda_outcome;
    return j;
}

ScenarioConfig parse_parameters(std::string_view kind, const ordered_json &node) {
    const std::string path = "parameters";
    ObjectReader r(node, path);
    ScenarioConfig config;
    if (kind == "qubit") {
        QubitScenario q;
        q.theta = r.real("theta");
        q.phi = r.real_or("phi", 0.0);
        q.frame_theta = r.real("frame_theta");
        q.frame_phi = r.real_or("frame_phi", 0.0);
        config.parameters = q;
    } else if (kind == "classical") {
        ClassicalScenario c;
        c.eta1 = r.real("eta1");
        c.eta2 = r.real("eta2");
        c.mass = r.real_or("mass", 1.0);
        c.omega = r.real_or("omega", 1.0);
        c.phase = r.real_or("phase", 0.0);
        if (c.eta1 < 0) {
            throw ValidationError(r.field("eta1") + ": must be non-negative.");
        }
        if (c.eta2 < 0) {
            throw ValidationError(r.field("eta2") + ": must be non-negative.");
        }
        if (c.mass <= 0) {
            throw ValidationError(r.field("mass") + ": must be positive.");
        }
        if (c.omega <= 0) {
            throw ValidationError(r.field("omega") + ": must be positive.");
        }
        config.parameters = c;
    } else if (kind == "oscillator") {
        OscillatorScenario o;
        o.level = uint32_t(r.unsigned_int("n", std::numeric_limits<uint32_t>::max()));
        o.ell = uint32_t(r.unsigned_int("ell", std::numeric_limits<uint32_t>::max()));
        o.params = optional_params(r, "params");
        config.parameters = o;
    } else if (kind == "field") {
        FieldScenario f;
        f.occupations = r.level_list("occupations");
        f.offsets = r.level_list("offsets");
        if (f.occupations.empty()) {
            throw ValidationError(r.field("occupations") + ": at least one mode is required.");
        }
        if (f.offsets.size() != f.occupations.size()) {
            throw ValidationError(
                r.field("offsets") + ": has " + std::to_string(f.offsets.size()) + " entries but occupations has " +
                std::to_string(f.occupations.size()) + ".");
        }
        if (r.has("params")) {
            const ordered_json &p = r.raw("params");
            if (p.is_array()) {
                if (p.size() != f.occupations.size()) {
                    throw ValidationError(
                        r.field("params") + ": per-mode list has " + std::to_string(p.size()) + " entries for " +
                        std::to_string(f.occupations.size()) + " modes.");
                }
                f.params.clear();
                for (size_t k = 0; k < p.size(); k++) {
                    f.params.push_back(read_params(p[k], r.field("params") + "[" + std::to_string(k) + "]"));
                }
            } else {
                f.params = {read_params(p, r.field("params"))};
            }
        }
        config.parameters = f;
    } else if (kind == "sample") {
        SampleScenario s;
        s.level = uint32_t(r.unsigned_int("n", DEFAULT_MAX_LEVEL));
        s.count = r.unsigned_int("count");
        if (s.count == 0) {
            throw ValidationError(r.field("count") + ": must be at least 1.");
        }
        s.seed = r.unsigned_int("seed");
        s.max_level = r.has("max_level") ? uint32_t(r.unsigned_int("max_level", DEFAULT_MAX_LEVEL))
                                         : std::min<uint32_t>(s.level + 5, DEFAULT_MAX_LEVEL);
        s.params = optional_params(r, "params");
        config.parameters = s;
    } else {
        throw ValidationError("kind: unknown scenario kind '" + std::string(kind) + "'.");
    }
    r.finish();
    return config;
}

ScenarioReport run_qubit(const QubitScenario &q) {
    ScenarioReport report;
    BlochVector state = bloch_from_angles(q.theta, q.phi);
    BlochVector frame = bloch_from_angles(q.frame_theta, q.frame_phi);
    OutcomeProbabilities probs = outcome_probabilities(state, frame);
    for (SpinOutcome outcome : {SpinOutcome::PLUS, SpinOutcome::MINUS}) {
        ordered_json item;
        item["outcome"] = int(outcome);
        item["probability"] = outcome == SpinOutcome::PLUS ? probs.p_plus : probs.p_minus;
        item["inferred_direction"] = vector_json(interpret({frame, outcome}));
        report.items.push_back(item);
    }
    report.summary["state"] = vector_json(state);
    report.summary["frame"] = vector_json(frame);
    report.summary["expectation"] = expectation(state, frame);
    return report;
}

ScenarioReport run_classical(const ClassicalScenario &c) {
    ScenarioReport report;
    auto particle = ClassicalOscillator::make(c.eta1, c.omega, c.phase, c.mass);
    auto detector = ClassicalOscillator::make(c.eta2, c.omega, c.phase, c.mass);
    report.summary["relative_amplitude"] = c.eta1 - c.eta2;
    report.summary["particle_energy"] = particle.energy();
    report.summary["observed_energy"] = observed_energy(particle, detector);
    return report;
}

ScenarioReport run_oscillator(const OscillatorScenario &o) {
    ScenarioReport report;
    EnergyEigenstate state{o.level};
    FrameOffset frame{o.ell};
    ordered_json item = record_json(measure(state, frame, o.params));
    report.items.push_back(item);
    report.summary["state_energy"] = eigenenergy(state, o.params);
    report.summary["zero_point_energy"] = eigenenergy(EnergyEigenstate{0}, o.params);
    report.summary["state_lambda"] = lambda_of(o.level, o.params).value;
    report.summary["frame_lambda"] = lambda_of(o.ell, o.params).value;
    return report;
}

ScenarioReport run_field(const FieldScenario &f) {
    ScenarioReport report;
    ModeSet modes = f.params.size() == 1 ? ModeSet::uniform(f.occupations.size(), f.params[0])
                                         : ModeSet::from_params(f.params);
    MultimodeState state{f.occupations};
    MultimodeFrame frame{f.offsets};
    auto records = mode_outcomes(state, frame, modes);
    for (size_t k = 0; k < records.size(); k++) {
        ordered_json item;
        item["mode"] = k;
        item["occupation"] = f.occupations[k];
        ordered_json record = record_json(records[k]);
        for (const auto &[key, value] : record.items()) {
            item[key] = value;
        }
        report.items.push_back(item);
    }
    report.summary["mode_count"] = modes.size();
    report.summary["total_relative_energy"] = total_relative_energy(state, frame, modes);
    report.summary["total_state_energy"] = total_state_energy(state, modes);
    report.summary["vacuum_partial_sum"] = vacuum_energy_partial_sum(modes);
    return report;
}

ScenarioReport run_sample(const SampleScenario &s) {
    ScenarioReport report;
    SampleBatch batch = sample_positions(EnergyEigenstate{s.level}, s.count, s.seed, s.params);
    LevelInference inference = infer_level(batch, s.max_level, s.params);
    double x2 = empirical_x2(batch);
    double sum4 = 0;
    for (double x : batch.positions) {
        sum4 += x * x * x * x;
    }
    double var_x2 = sum4 / double(batch.positions.size()) - x2 * x2;
    report.summary["empirical_x2"] = x2;
    report.summary["x2_standard_error"] = std::sqrt(std::max(var_x2, 0.0) / double(batch.positions.size()));
    report.summary["expected_x2"] = x2_expectation(EnergyEigenstate{s.level}, s.params);
    report.summary["inferred_level"] = inference.best;
    report.summary["log_likelihoods"] = inference.log_likelihoods;
    return report;
}

}  // namespace

std::string_view ScenarioConfig::kind() const {
    return KIND_NAMES[parameters.index()];
}

ScenarioConfig parse_scenario(const ordered_json &doc) {
    ObjectReader top(doc, "$");
    const ordered_json &kind = top.raw("kind");
    if (!kind.is_string()) {
        throw ValidationError("kind: expected a string.");
    }
    ScenarioConfig config = parse_parameters(kind.get<std::string>(), top.raw("parameters"));
    top.finish();
    return config;
}

ScenarioConfig parse_scenario_text(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("Scenario is not valid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

ordered_json serialize_scenario(const ScenarioConfig &config) {
    ordered_json doc;
    doc["kind"] = std::string(config.kind());
    ordered_json p = ordered_json::object();
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, QubitScenario>) {
                p["theta"] = s.theta;
                p["phi"] = s.phi;
                p["frame_theta"] = s.frame_theta;
                p["frame_phi"] = s.frame_phi;
            } else if constexpr (std::is_same_v<T, ClassicalScenario>) {
                p["eta1"] = s.eta1;
                p["eta2"] = s.eta2;
                p["mass"] = s.mass;
                p["omega"] = s.omega;
                p["phase"] = s.phase;
            } else if constexpr (std::is_same_v<T, OscillatorScenario>) {
                p["n"] = s.level;
                p["ell"] = s.ell;
                p["params"] = params_json(s.params);
            } else if constexpr (std::is_same_v<T, FieldScenario>) {
                p["occupations"] = s.occupations;
                p["offsets"] = s.offsets;
                if (s.params.size() == 1) {
                    p["params"] = params_json(s.params[0]);
                } else {
                    p["params"] = ordered_json::array();
                    for (const auto &m : s.params) {
                        p["params"].push_back(params_json(m));
                    }
                }
            } else {
                p["n"] = s.level;
                p["count"] = s.count;
                p["seed"] = s.seed;
                p["max_level"] = s.max_level;
                p["params"] = params_json(s.params);
            }
        },
        config.parameters);
    doc["parameters"] = p;
    return doc;
}

ordered_json ScenarioReport::to_json() const {
    ordered_json doc;
    doc["config"] = serialize_scenario(config);
    doc["items"] = items;
    doc["summary"] = summary;
    return doc;
}

ScenarioReport run_scenario(const ScenarioConfig &config) {
    ScenarioReport report = std::visit(
        [](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, QubitScenario>) {
                return run_qubit(s);
            } else if constexpr (std::is_same_v<T, ClassicalScenario>) {
                return run_classical(s);
            } else if constexpr (std::is_same_v<T, OscillatorScenario>) {
                return run_oscillator(s);
            } else if constexpr (std::is_same_v<T, FieldScenario>) {
                return run_field(s);
            } else {
                return run_sample(s);
            }
        },
        config.parameters);
    report.config = config;
    return report;
}

ordered_json infer_report(const SampleBatch &batch, uint32_t max_level, const OscillatorParams &params) {
    LevelInference inference = infer_level(batch, max_level, params);
    ordered_json doc;
    ordered_json input;
    input["seed"] = batch.seed;
    input["level_claimed"] = batch.level_claimed.has_value() ? ordered_json(*batch.level_claimed) : ordered_json();
    input["count"] = batch.positions.size();
    input["max_level"] = max_level;
    input["params"] = params_json(params);
    doc["input"] = input;
    ordered_json summary;
    summary["inferred_level"] = inference.best;
    summary["empirical_x2"] = empirical_x2(batch);
    summary["log_likelihoods"] = inference.log_likelihoods;
    doc["summary"] = summary;
    return doc;
}

Table emit_figure1(const Grid &grid, const OscillatorParams &params) {
    Table table;
    table.columns = {"x", "p0", "p1", "p2", "p3"};
    std::vector<std::vector<DensitySample>> columns;
    for (uint32_t n = 0; n < 4; n++) {
        columns.push_back(density_grid(EnergyEigenstate{n}, grid, params));
    }
    table.rows.reserve(grid.points);
    for (size_t i = 0; i < grid.points; i++) {
        std::vector<double> row{columns[0][i].x};
        for (const auto &col : columns) {
            row.push_back(col[i].density);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table density_table(uint32_t level, const Grid &grid, const OscillatorParams &params) {
    Table table;
    table.columns = {"x", "density"};
    for (const auto &s : density_grid(EnergyEigenstate{level}, grid, params)) {
        table.rows.push_back({s.x, s.density});
    }
    return table;
}

}  // namespace zpf
