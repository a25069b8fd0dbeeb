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

#include "zpf/oscillator.h"

#include <cstdint>

namespace zpf {

double eigenenergy(EnergyEigenstate state, const OscillatorParams &params) {
    params.validate();
    return (double(state.level) + 0.5) * params.hbar * params.omega;
}

double position_density(EnergyEigenstate state, double x, const OscillatorParams &params, unsigned max_level) {
    double psi = hermite_psi(state.level, x, params, max_level);
    return psi * psi;
}

std::vector<DensitySample> density_grid(
    EnergyEigenstate state, const Grid &grid, const OscillatorParams &params, unsigned max_level) {
    std::vector<DensitySample> table;
    table.reserve(grid.points);
    for (size_t k = 0; k < grid.points; k++) {
        double x = grid.at(k);
        table.push_back({x, position_density(state, x, params, max_level)});
    }
    return table;
}

double x2_expectation(EnergyEigenstate state, const OscillatorParams &params) {
    params.validate();
    return (2.0 * double(state.level) + 1.0) * params.length_scale_squared() / 2.0;
}

LambdaVector lambda_of(uint32_t k, const OscillatorParams &params) {
    params.validate();
    return {(2.0 * double(k) + 1.0) * params.length_scale_squared()};
}

double lambda_spacing(const OscillatorParams &params) {
    params.validate();
    return 2.0 * params.length_scale_squared();
}

MeasurementRecord measure(EnergyEigenstate state, FrameOffset frame, const OscillatorParams &params) {
    params.validate();
    // Everything is a function of the rung difference alone.
    int64_t diff = int64_t(state.level) - int64_t(frame.ell);
    MeasurementRecord record;
    record.frame = frame;
    record.lambda_outcome = 2.0 * double(diff) * params.length_scale_squared();
    record.in_support = diff >= 0;
    if (record.in_support) {
        record.eigenvalue_outcome = (double(diff) + 0.5) * params.hbar * params.omega;
    }
    return record;
}

}  // namespace zpf
