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

#ifndef ZPF_OSCILLATOR_H
#define ZPF_OSCILLATOR_H

#include <cstdint>
#include <optional>
#include <vector>

#include "zpf/numerics.h"
#include "zpf/params.h"

namespace zpf {

/// |eps_n>, the n-th energy eigenstate.
struct EnergyEigenstate {
    uint32_t level = 0;
    bool operator==(const EnergyEigenstate &) const = default;
};

/// Ladder position ell of the shifted observable
///     sum_m eps_m |eps_{m+ell}><eps_{m+ell}|,
/// read as a detector parked at rung ell. ell = 0 is the Hamiltonian.
struct FrameOffset {
    uint32_t ell = 0;
    bool operator==(const FrameOffset &) const = default;
};

/// Ladder coordinate (2k+1) hbar/(m omega), shared by states and detector frames.
struct LambdaVector {
    double value;
};

/// Result of measuring an eigenstate against a shifted observable.
///
/// Two readings are carried: the spectral eigenvalue eps_{n-ell} (absent when
/// n < ell, i.e. the state is outside the observable's support) and the signed
/// ladder displacement lambda_n - lambda_ell. The displacement never carries a
/// zero-point term: lambda = 2 (eigenvalue - eps_0) / (m omega^2).
struct MeasurementRecord {
    FrameOffset frame;
    std::optional<double> eigenvalue_outcome;
    double lambda_outcome;
    bool in_support;
};

/// One row of a sampled density table.
struct DensitySample {
    double x;
    double density;
};

/// (n + 1/2) hbar omega.
double eigenenergy(EnergyEigenstate state, const OscillatorParams &params);

/// |<x|eps_n>|^2.
double position_density(
    EnergyEigenstate state, double x, const OscillatorParams &params, unsigned max_level = DEFAULT_MAX_LEVEL);

/// Density sampled at every grid point.
std::vector<DensitySample> density_grid(
    EnergyEigenstate state, const Grid &grid, const OscillatorParams &params, unsigned max_level = DEFAULT_MAX_LEVEL);

/// <eps_n|x^2|eps_n> = (2n+1) hbar / (2 m omega).
double x2_expectation(EnergyEigenstate state, const OscillatorParams &params);

/// lambda_k = (2k+1) hbar/(m omega). Used for states (k = n) and frames (k = ell).
LambdaVector lambda_of(uint32_t k, const OscillatorParams &params);

/// Spacing between adjacent rungs, 2 hbar/(m omega).
double lambda_spacing(const OscillatorParams &params);

/// Measures |eps_n> with the observable shifted by frame.ell. Never throws for
/// n < ell; that case is reported with in_support = false.
MeasurementRecord measure(EnergyEigenstate state, FrameOffset frame, const OscillatorParams &params);

}  // namespace zpf

#endif
