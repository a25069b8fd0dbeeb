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

#ifndef ZPF_BLOCH_H
#define ZPF_BLOCH_H

#include <array>

namespace zpf {

/// Tolerance on |v|^2 - 1 accepted by BlochVector::make.
constexpr double BLOCH_UNIT_TOLERANCE = 1e-9;

/// A unit 3-vector on the Bloch sphere. The same type stands for a pure qubit
/// state rho = (1 + v.sigma)/2 and for the direction of a spin observable v'.sigma,
/// which is what lets a measurement frame sit in the same space as the state.
class BlochVector {
   public:
    /// Throws DomainError if the components are non-finite or not unit length.
    static BlochVector make(double nx, double ny, double nz);

    double nx() const {
        return v_[0];
    }
    double ny() const {
        return v_[1];
    }
    double nz() const {
        return v_[2];
    }
    const std::array<double, 3> &components() const {
        return v_;
    }

    double dot(const BlochVector &other) const;
    BlochVector operator-() const;
    bool operator==(const BlochVector &other) const = default;

   private:
    explicit BlochVector(std::array<double, 3> v) : v_(v) {
    }
    std::array<double, 3> v_;
};

/// Eigenvalue of a spin observable.
enum class SpinOutcome : int { MINUS = -1, PLUS = +1 };

struct SpinMeasurement {
    BlochVector frame;
    SpinOutcome outcome;
};

struct OutcomeProbabilities {
    double p_plus;
    double p_minus;
};

/// (sin t cos p, sin t sin p, cos t). Angles outside the principal ranges are
/// accepted; the trigonometric form wraps them. Non-finite angles throw.
BlochVector bloch_from_angles(double theta, double phi);

/// <v'.sigma> in the state: the dot product of state and frame directions.
double expectation(const BlochVector &state, const BlochVector &frame);

/// Born-rule probabilities of the +1 and -1 eigenvalues of frame.sigma.
/// The pair always sums to exactly 1.
OutcomeProbabilities outcome_probabilities(const BlochVector &state, const BlochVector &frame);

/// Spin direction implied by an outcome: the frame itself for +1, its antipode
/// for -1. An outcome only says "same" or "opposite" relative to the frame.
BlochVector interpret(const SpinMeasurement &record);

}  // namespace zpf

#endif
