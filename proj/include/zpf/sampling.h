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

#ifndef ZPF_SAMPLING_H
#define ZPF_SAMPLING_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "zpf/numerics.h"
#include "zpf/oscillator.h"
#include "zpf/params.h"

namespace zpf {

/// Deterministic random source for position sampling.
///
/// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Uniform and normal variates are derived here rather than with
/// <random> distributions, whose algorithms are implementation defined. Any
/// change to the derivation must bump SAMPLER_VERSION.
class SampleRng {
   public:
    static constexpr int SAMPLER_VERSION = 1;

    explicit SampleRng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller (both outputs used).
    double normal();

   private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

/// Positions drawn from |<x|eps_n>|^2.
struct SampleBatch {
    std::optional<uint32_t> level_claimed;
    std::vector<double> positions;
    uint64_t seed = 0;

    bool operator==(const SampleBatch &) const = default;
};

struct LevelInference {
    uint32_t best;
    /// Total log-likelihood sum_i log psi_n(x_i)^2 for n = 0 .. max_level.
    std::vector<double> log_likelihoods;
};

/// Rejection-sampling envelope for one level: a centred Gaussian of variance
/// (2n+1)/2 in dimensionless units (the level's own <u^2>) scaled by `scale`,
/// so that phi_n(u)^2 <= scale * gaussian(u) everywhere.
struct RejectionEnvelope {
    double variance;
    double scale;
};

/// Builds the envelope for level n. The scale is the grid maximum of the
/// density/Gaussian ratio times a 1.05 safety margin.
RejectionEnvelope rejection_envelope(uint32_t level, unsigned max_level = DEFAULT_MAX_LEVEL);

/// Draws `count` i.i.d. positions from the level-n density. Identical inputs
/// give bit-identical batches. Throws DomainError if the envelope is ever
/// found not to dominate the density.
SampleBatch sample_positions(
    EnergyEigenstate state,
    size_t count,
    uint64_t seed,
    const OscillatorParams &params = {},
    unsigned max_level = DEFAULT_MAX_LEVEL);

/// Maximum-likelihood level among 0..max_level; ties go to the smaller level.
/// Throws DensityUnderflowError when every candidate density is zero at a sample.
LevelInference infer_level(
    const SampleBatch &batch, uint32_t max_level, const OscillatorParams &params = {},
    unsigned level_cap = DEFAULT_MAX_LEVEL);

/// Mean of the squared positions.
double empirical_x2(const SampleBatch &batch);

/// CSV form: a '#' metadata line carrying level_claimed and seed, an "x"
/// header, then one position per line at round-trip precision.
void write_batch_csv(std::ostream &out, const SampleBatch &batch);
/// Inverse of write_batch_csv. Throws ValidationError on malformed input.
SampleBatch read_batch_csv(std::istream &in);

}  // namespace zpf

#endif
