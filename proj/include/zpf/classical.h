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

#ifndef ZPF_CLASSICAL_H
#define ZPF_CLASSICAL_H

namespace zpf {

/// x(t) = eta cos(omega t + phase) for a point of the given mass.
struct ClassicalOscillator {
    double eta;
    double omega;
    double phase;
    double mass;

    /// Throws DomainError unless eta >= 0, omega > 0, mass > 0 and all finite.
    static ClassicalOscillator make(double eta, double omega, double phase, double mass);

    /// Mechanical energy (1/2) m omega^2 eta^2.
    double energy() const;
};

/// Two oscillators count as sharing a frequency/phase when they agree to this.
constexpr double CLASSICAL_MATCH_TOLERANCE = 1e-12;

double position_at(const ClassicalOscillator &osc, double t);

/// Particle position as seen from a detector riding the second oscillator:
/// (eta1 - eta2) cos(omega t + phase). Requires shared omega and phase and
/// eta2 <= eta1; otherwise throws DomainError.
double relative_position_at(const ClassicalOscillator &particle, const ClassicalOscillator &detector, double t);

/// Energy the co-moving detector attributes to the particle,
/// (1/2) m omega^2 (eta1 - eta2)^2 with m the particle mass. Zero iff eta1 == eta2.
double observed_energy(const ClassicalOscillator &particle, const ClassicalOscillator &detector);

}  // namespace zpf

#endif
