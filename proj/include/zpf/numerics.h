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

#ifndef ZPF_NUMERICS_H
#define ZPF_NUMERICS_H

#include <cstddef>
#include <span>
#include <vector>

#include "zpf/params.h"

namespace zpf {

/// Highest eigenfunction index evaluated unless the caller raises the cap.
constexpr unsigned DEFAULT_MAX_LEVEL = 60;

/// Uniformly spaced sample points on [x_min, x_max], endpoints included.
struct Grid {
    double x_min;
    double x_max;
    size_t points;

    /// Validating constructor. Requires finite x_min < x_max and points >= 2.
    static Grid make(double x_min, double x_max, size_t points);

    double spacing() const;
    double at(size_t index) const;
    std::vector<double> coordinates() const;
};

/// Nodes and weights for integrals of the form  int f(x) exp(-x^2) dx.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    size_t size() const {
        return nodes.size();
    }
};

/// L2-normalized n-th oscillator eigenfunction psi_n(x) at a physical position.
///
/// Evaluated with the normalized three-term recurrence
///     phi_{k+1} = sqrt(2/(k+1)) u phi_k - sqrt(k/(k+1)) phi_{k-1},
/// u = x sqrt(m omega / hbar), seeded with the Gaussian ground state, so no
/// factorial or power of two is ever formed.
///
/// Throws DomainError when n > max_level or params are not strictly positive.
double hermite_psi(unsigned n, double x, const OscillatorParams &params, unsigned max_level = DEFAULT_MAX_LEVEL);

/// Dimensionless eigenfunction phi_n(u), normalized over du.
double hermite_phi(unsigned n, double u, unsigned max_level = DEFAULT_MAX_LEVEL);

/// phi_0(u) .. phi_n(u) in one recurrence pass. out.size() determines n + 1.
void hermite_phi_all(double u, std::span<double> out);

/// phi_n(u) * exp(u^2 / 2): the Gaussian-free polynomial part of phi_n,
/// for integrating eigenfunction products against the exp(-u^2) weight.
double hermite_phi_polynomial(unsigned n, double u, unsigned max_level = DEFAULT_MAX_LEVEL);

/// Gauss-Hermite rule with `count` nodes (1 <= count <= 256), built by Newton
/// iteration on the normalized Hermite recurrence. Nodes strictly increasing.
QuadratureRule gauss_hermite_rule(size_t count);

/// Composite trapezoid estimate of the integral of sampled values over the grid.
double integrate_on_grid(std::span<const double> values, const Grid &grid);

}  // namespace zpf

#endif
