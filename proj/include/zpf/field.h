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

#ifndef ZPF_FIELD_H
#define ZPF_FIELD_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zpf/oscillator.h"
#include "zpf/params.h"

namespace zpf {

/// A finite set of decoupled field modes, H = sum_k hbar omega_k (N_k + 1/2).
class ModeSet {
   public:
    /// M copies of the same constants (the uniform-frequency field).
    static ModeSet uniform(size_t mode_count, const OscillatorParams &params = {});
    /// One entry per mode. Throws DomainError when empty or any entry is invalid.
    static ModeSet from_params(std::vector<OscillatorParams> params_per_mode);

    size_t size() const {
        return params_.size();
    }
    const OscillatorParams &operator[](size_t k) const {
        return params_[k];
    }
    const std::vector<OscillatorParams> &params() const {
        return params_;
    }

   private:
    explicit ModeSet(std::vector<OscillatorParams> params) : params_(std::move(params)) {
    }
    std::vector<OscillatorParams> params_;
};

/// |eps_{n_1}>_1 (x) |eps_{n_2}>_2 (x) ...
struct MultimodeState {
    std::vector<uint32_t> occupations;
    bool operator==(const MultimodeState &) const = default;
};

/// Per-mode detector rungs (ell_1, ell_2, ...).
struct MultimodeFrame {
    std::vector<uint32_t> offsets;
    bool operator==(const MultimodeFrame &) const = default;
};

/// Photon numbers registered by one counter per mode.
struct DetectionRecord {
    std::vector<uint32_t> counts;
};

/// Zero-point energy summed over M modes of frequency omega: M hbar omega / 2.
/// Grows without bound in M.
double vacuum_energy_partial_sum(size_t mode_count, const OscillatorParams &params = {});

/// Zero-point energy of an arbitrary mode set, sum_k hbar omega_k / 2.
double vacuum_energy_partial_sum(const ModeSet &modes);

/// Per-mode measurement records; entry k is measure(n_k, ell_k, params_k).
std::vector<MeasurementRecord> mode_outcomes(
    const MultimodeState &state, const MultimodeFrame &frame, const ModeSet &modes);

/// Energy the detectors register in total, sum_k (n_k - ell_k) hbar omega_k.
/// Throws OutOfSupportError naming the first mode with n_k < ell_k.
double total_relative_energy(const MultimodeState &state, const MultimodeFrame &frame, const ModeSet &modes);

/// The eigenstate a frame assigns to a detection record: n_k = count_k + ell_k.
MultimodeState state_from_counts(const DetectionRecord &record, const MultimodeFrame &frame);

/// Absolute energy sum_k (n_k + 1/2) hbar omega_k, zero-point terms included.
double total_state_energy(const MultimodeState &state, const ModeSet &modes);

}  // namespace zpf

#endif
