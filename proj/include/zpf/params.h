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

#ifndef ZPF_PARAMS_H
#define ZPF_PARAMS_H

namespace zpf {

/// Mass, angular frequency and reduced Planck constant of one oscillator
/// (or one field mode). Defaults to natural units, where hbar/(m*omega) = 1.
struct OscillatorParams {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;

    /// Throws DomainError unless every constant is finite and strictly positive.
    void validate() const;

    /// hbar / (m * omega): the squared oscillator length.
    double length_scale_squared() const;
    /// sqrt(m * omega / hbar): converts physical positions to dimensionless ones.
    double inverse_length_scale() const;

    bool operator==(const OscillatorParams &other) const = default;
};

}  // namespace zpf

#endif
