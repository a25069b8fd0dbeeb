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

#include "zpf/bloch.h"

#include <algorithm>
#include <cmath>

#include "zpf/errors.h"

namespace zpf {

BlochVector BlochVector::make(double nx, double ny, double nz) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz)) {
        throw DomainError("Bloch vector components must be finite.");
    }
    double norm2 = nx * nx + ny * ny + nz * nz;
    if (std::abs(norm2 - 1.0) > BLOCH_UNIT_TOLERANCE) {
        throw DomainError("Bloch vector is not unit length (|v|^2 = " + std::to_string(norm2) + ").");
    }
    return BlochVector({nx, ny, nz});
}

double BlochVector::dot(const BlochVector &other) const {
    return v_[0] * other.v_[0] + v_[1] * other.v_[1] + v_[2] * other.v_[2];
}

BlochVector BlochVector::operator-() const {
    return BlochVector({-v_[0], -v_[1], -v_[2]});
}

BlochVector bloch_from_angles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("Bloch angles must be finite.");
    }
    double s = std::sin(theta);
    return BlochVector::make(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

double expectation(const BlochVector &state, const BlochVector &frame) {
    // Unit vectors can still overshoot 1 by rounding.
    return std::clamp(state.dot(frame), -1.0, 1.0);
}

OutcomeProbabilities outcome_probabilities(const BlochVector &state, const BlochVector &frame) {
    double e = expectation(state, frame);
    // Form the smaller probability directly and take the complement of it, so
    // the two entries add to 1 without rounding.
    if (e >= 0) {
        double p_minus = 0.5 * (1.0 - e);
        return {1.0 - p_minus, p_minus};
    }
    double p_plus = 0.5 * (1.0 + e);
    return {p_plus, 1.0 - p_plus};
}

BlochVector interpret(const SpinMeasurement &record) {
    return record.outcome == SpinOutcome::PLUS ? record.frame : -record.frame;
}

}  // namespace zpf
