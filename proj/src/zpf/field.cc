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

#include "zpf/field.h"

#include <cstdint>
#include <string>

#include "zpf/errors.h"

namespace zpf {

namespace {

void check_length(size_t got, size_t want, const char *what) {
    if (got != want) {
        throw DomainError(
            std::string(what) + " has " + std::to_string(got) + " entries but the mode set has " +
            std::to_string(want) + ".");
    }
}

}  // namespace

ModeSet ModeSet::uniform(size_t mode_count, const OscillatorParams &params) {
    if (mode_count == 0) {
        throw DomainError("A mode set needs at least one mode.");
    }
    params.validate();
    return ModeSet(std::vector<OscillatorParams>(mode_count, params));
}

ModeSet ModeSet::from_params(std::vector<OscillatorParams> params_per_mode) {
    if (params_per_mode.empty()) {
        throw DomainError("A mode set needs at least one mode.");
    }
    for (const auto &p : params_per_mode) {
        p.validate();
    }
    return ModeSet(std::move(params_per_mode));
}

double vacuum_energy_partial_sum(size_t mode_count, const OscillatorParams &params) {
    if (mode_count == 0) {
        throw DomainError("Vacuum partial sum needs at least one mode.");
    }
    params.validate();
    return double(mode_count) * 0.5 * params.hbar * params.omega;
}

double vacuum_energy_partial_sum(const ModeSet &modes) {
    double total = 0;
    for (const auto &p : modes.params()) {
        total += 0.5 * p.hbar * p.omega;
    }
    return total;
}

std::vector<MeasurementRecord> mode_outcomes(
    const MultimodeState &state, const MultimodeFrame &frame, const ModeSet &modes) {
    check_length(state.occupations.size(), modes.size(), "Multimode state");
    check_length(frame.offsets.size(), modes.size(), "Multimode frame");
    std::vector<MeasurementRecord> records;
    records.reserve(modes.size());
    for (size_t k = 0; k < modes.size(); k++) {
        records.push_back(measure(EnergyEigenstate{state.occupations[k]}, FrameOffset{frame.offsets[k]}, modes[k]));
    }
    return records;
}

double total_relative_energy(const MultimodeState &state, const MultimodeFrame &frame, const ModeSet &modes) {
    check_length(state.occupations.size(), modes.size(), "Multimode state");
    check_length(frame.offsets.size(), modes.size(), "Multimode frame");
    double total = 0;
    for (size_t k = 0; k < modes.size(); k++) {
        uint32_t n = state.occupations[k];
        uint32_t ell = frame.offsets[k];
        if (n < ell) {
            throw OutOfSupportError(
                k, "Mode " + std::to_string(k) + " has occupation " + std::to_string(n) + " below its frame offset " +
                       std::to_string(ell) + "; the shifted observable has no outcome there.");
        }
        // (1/2) m omega^2 * lambda_k reduces to (n - ell) hbar omega; the
        // integer form keeps n == ell exactly zero.
        total += double(n - ell) * modes[k].hbar * modes[k].omega;
    }
    return total;
}

MultimodeState state_from_counts(const DetectionRecord &record, const MultimodeFrame &frame) {
    if (record.counts.size() != frame.offsets.size()) {
        throw DomainError(
            "Detection record has " + std::to_string(record.counts.size()) + " counters but the frame has " +
            std::to_string(frame.offsets.size()) + " offsets.");
    }
    MultimodeState state;
    state.occupations.resize(record.counts.size());
    for (size_t k = 0; k < record.counts.size(); k++) {
        state.occupations[k] = record.counts[k] + frame.offsets[k];
    }
    return state;
}

double total_state_energy(const MultimodeState &state, const ModeSet &modes) {
    check_length(state.occupations.size(), modes.size(), "Multimode state");
    double total = 0;
    for (size_t k = 0; k < modes.size(); k++) {
        total += (double(state.occupations[k]) + 0.5) * modes[k].hbar * modes[k].omega;
    }
    return total;
}

}  // namespace zpf
