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

#include "zpf/classical.h"

#include <cmath>

#include "zpf/errors.h"

namespace zpf {

namespace {

void check_comoving(const ClassicalOscillator &particle, const ClassicalOscillator &detector) {
    if (std::abs(particle.omega - detector.omega) > CLASSICAL_MATCH_TOLERANCE) {
        throw DomainError("Particle and detector oscillators must share the same angular frequency.");
    }
    if (std::abs(particle.phase - detector.phase) > CLASSICAL_MATCH_TOLERANCE) {
        throw DomainError("Particle and detector oscillators must share the same phase.");
    }
    if (detector.eta > particle.eta) {
        throw DomainError("Detector amplitude must not exceed the particle amplitude (eta2 <= eta1).");
    }
}

}  // namespace

ClassicalOscillator ClassicalOscillator::make(double eta, double omega, double phase, double mass) {
    if (!std::isfinite(eta) || !std::isfinite(omega) || !std::isfinite(phase) || !std::isfinite(mass)) {
        throw DomainError("Classical oscillator parameters must be finite.");
    }
    if (eta < 0) {
        throw DomainError("Classical oscillator amplitude must be non-negative.");
    }
    if (omega <= 0) {
        throw DomainError("Classical oscillator angular frequency must be positive.");
    }
    if (mass <= 0) {
        throw DomainError("Classical oscillator mass must be positive.");
    }
    return {eta, omega, phase, mass};
}

double ClassicalOscillator::energy() const {
    return 0.5 * mass * omega * omega * eta * eta;
}

double position_at(const ClassicalOscillator &osc, double t) {
    return osc.eta * std::cos(osc.omega * t + osc.phase);
}

double relative_position_at(const ClassicalOscillator &particle, const ClassicalOscillator &detector, double t) {
    check_comoving(particle, detector);
    return (particle.eta - detector.eta) * std::cos(particle.omega * t + particle.phase);
}

double observed_energy(const ClassicalOscillator &particle, const ClassicalOscillator &detector) {
    check_comoving(particle, detector);
    double d = particle.eta - detector.eta;
    return 0.5 * particle.mass * particle.omega * particle.omega * d * d;
}

}  // namespace zpf
