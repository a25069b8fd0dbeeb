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

#ifndef ZPF_SCENARIO_H
#define ZPF_SCENARIO_H

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zpf/numerics.h"
#include "zpf/params.h"
#include "zpf/report_format.h"
#include "zpf/sampling.h"

namespace zpf {

struct QubitScenario {
    double theta = 0;
    double phi = 0;
    double frame_theta = 0;
    double frame_phi = 0;
    bool operator==(const QubitScenario &) const = default;
};

struct ClassicalScenario {
    double eta1 = 0;
    double eta2 = 0;
    double mass = 1;
    double omega = 1;
    double phase = 0;
    bool operator==(const ClassicalScenario &) const = default;
};

struct OscillatorScenario {
    uint32_t level = 0;
    uint32_t ell = 0;
    OscillatorParams params;
    bool operator==(const OscillatorScenario &) const = default;
};

struct FieldScenario {
    std::vector<uint32_t> occupations;
    std::vector<uint32_t> offsets;
    /// One entry (shared by every mode) or one entry per mode.
    std::vector<OscillatorParams> params{OscillatorParams{}};
    bool operator==(const FieldScenario &) const = default;
};

struct SampleScenario {
    uint32_t level = 0;
    uint64_t count = 0;
    uint64_t seed = 0;
    uint32_t max_level = 0;
    OscillatorParams params;
    bool operator==(const SampleScenario &) const = default;
};

/// A scenario file: {"kind": <name>, "parameters": {...}}.
struct ScenarioConfig {
    std::variant<QubitScenario, ClassicalScenario, OscillatorScenario, FieldScenario, SampleScenario> parameters;

    std::string_view kind() const;
    bool operator==(const ScenarioConfig &) const = default;
};

/// Parses and validates a scenario document. Unknown keys, missing required
/// keys, wrong types and non-physical constants raise ValidationError whose
/// message names the offending field path.
ScenarioConfig parse_scenario(const nlohmann::ordered_json &doc);
ScenarioConfig parse_scenario_text(std::string_view text);

/// Canonical JSON form; parse_scenario(serialize_scenario(c)) == c.
nlohmann::ordered_json serialize_scenario(const ScenarioConfig &config);

/// Config echo, per-item outcomes and summary scalars of one run.
struct ScenarioReport {
    ScenarioConfig config;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
};

/// Runs a validated config through the owning module. Deterministic: the same
/// config always yields the same report. Domain errors propagate.
ScenarioReport run_scenario(const ScenarioConfig &config);

/// Report for level inference on an existing batch.
nlohmann::ordered_json infer_report(const SampleBatch &batch, uint32_t max_level, const OscillatorParams &params);

/// Columns x, p0, p1, p2, p3: the first four eigenstate densities over the grid.
Table emit_figure1(const Grid &grid, const OscillatorParams &params = {});

/// Columns x, density for one level.
Table density_table(uint32_t level, const Grid &grid, const OscillatorParams &params = {});

}  // namespace zpf

#endif
