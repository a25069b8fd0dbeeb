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

#include "zpf/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zpf/errors.h"

namespace zpf {

namespace {

// pi^(-1/4), the ground-state amplitude at the origin.
const double PI_M4 = std::pow(std::numbers::pi, -0.25);

void check_level(unsigned n, unsigned max_level) {
    if (n > max_level) {
        throw DomainError(
            "Eigenfunction level " + std::to_string(n) + " exceeds the evaluation cap " + std::to_string(max_level) +
            ".");
    }
}

// Runs the normalized recurrence from `seed` (the value of phi_0 or its
// polynomial part) up to level n.
double normalized_recurrence(unsigned n, double u, double seed) {
    double prev = 0.0;
    double cur = seed;
    for (unsigned k = 0; k < n; k++) {
        double next = std::sqrt(2.0 / (k + 1)) * u * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

void OscillatorParams::validate() const {
    auto check = [](double v, const char *name) {
        if (!std::isfinite(v) || v <= 0) {
            throw DomainError(std::string("Oscillator parameter '") + name + "' must be finite and positive.");
        }
    };
    check(mass, "mass");
    check(omega, "omega");
    check(hbar, "hbar");
}

double OscillatorParams::length_scale_squared() const {
    return hbar / (mass * omega);
}

double OscillatorParams::inverse_length_scale() const {
    return std::sqrt(mass * omega / hbar);
}

Grid Grid::make(double x_min, double x_max, size_t points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw DomainError("Grid requires finite bounds with x_min < x_max.");
    }
    if (points < 2) {
        throw DomainError("Grid requires at least 2 points.");
    }
    return Grid{x_min, x_max, points};
}

double Grid::spacing() const {
    return (x_max - x_min) / double(points - 1);
}

double Grid::at(size_t index) const {
    if (index + 1 == points) {
        return x_max;
    }
    return x_min + double(index) * spacing();
}

std::vector<double> Grid::coordinates() const {
    std::vector<double> result(points);
    for (size_t k = 0; k < points; k++) {
        result[k] = at(k);
    }
    return result;
}

double hermite_phi(unsigned n, double u, unsigned max_level) {
    check_level(n, max_level);
    return normalized_recurrence(n, u, PI_M4 * std::exp(-0.5 * u * u));
}

void hermite_phi_all(double u, std::span<double> out) {
    if (out.empty()) {
        return;
    }
    out[0] = PI_M4 * std::exp(-0.5 * u * u);
    double prev = 0.0;
    for (size_t k = 0; k + 1 < out.size(); k++) {
        out[k + 1] = std::sqrt(2.0 / double(k + 1)) * u * out[k] - std::sqrt(double(k) / double(k + 1)) * prev;
        prev = out[k];
    }
}

double hermite_phi_polynomial(unsigned n, double u, unsigned max_level) {
    check_level(n, max_level);
    return normalized_recurrence(n, u, PI_M4);
}

double hermite_psi(unsigned n, double x, const OscillatorParams &params, unsigned max_level) {
    params.validate();
    double inv_len = params.inverse_length_scale();
    // psi_n(x) = (m omega / hbar)^(1/4) phi_n(x sqrt(m omega / hbar)).
    return std::sqrt(inv_len) * hermite_phi(n, x * inv_len, max_level);
}

QuadratureRule gauss_hermite_rule(size_t count) {
    if (count < 1 || count > 256) {
        throw DomainError("Gauss-Hermite node count must lie in [1, 256], got " + std::to_string(count) + ".");
    }
    const size_t n = count;
    const size_t half = (n + 1) / 2;
    std::vector<double> roots(half);
    std::vector<double> root_weights(half);

    // Largest roots first. Large rules seed the outer roots from the Airy
    // asymptotics at the turning point and step inward by the WKB zero spacing.
    double z = 0;
    for (size_t i = 0; i < half; i++) {
        if (n <= 100 && i < 4) {
            // Small rules: the classic estimates for the four largest roots.
            if (i == 0) {
                z = std::sqrt(double(2 * n + 1)) - 1.85575 * std::pow(double(2 * n + 1), -0.16667);
            } else if (i == 1) {
                z -= 1.14 * std::pow(double(n), 0.426) / z;
            } else if (i == 2) {
                z = 1.86 * z - 0.86 * roots[0];
            } else {
                z = 1.91 * z - 0.91 * roots[1];
            }
        } else if (n <= 100) {
            z = 2.0 * z - roots[i - 2];
        } else if (i < 5) {
            // Airy zero a_(i+1) from its asymptotic series.
            double t = 3.0 * std::numbers::pi / 8.0 * double(4 * i + 3);
            double airy = std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t));
            z = std::sqrt(double(2 * n + 1)) - airy * std::pow(2.0, -1.0 / 3.0) * std::pow(double(2 * n + 1), -1.0 / 6.0);
        } else {
            z -= std::numbers::pi / std::sqrt(double(2 * n + 1) - z * z);
        }

        double derivative = 0;
        bool converged = false;
        for (int iter = 0; iter < 100; iter++) {
            double p_prev = 0.0;
            double p_cur = PI_M4;
            for (size_t j = 0; j < n; j++) {
                double p_next = std::sqrt(2.0 / double(j + 1)) * z * p_cur - std::sqrt(double(j) / double(j + 1)) * p_prev;
                p_prev = p_cur;
                p_cur = p_next;
            }
            // p_cur is the degree-n normalized polynomial, p_prev degree n-1.
            derivative = std::sqrt(2.0 * double(n)) * p_prev;
            double step = p_cur / derivative;
            z -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw DomainError("Gauss-Hermite Newton iteration failed to converge at root " + std::to_string(i) + ".");
        }
        if ((i > 0 && z >= roots[i - 1]) || z < -1e-12) {
            throw DomainError("Gauss-Hermite Newton iteration converged to a repeated root at " + std::to_string(i) + ".");
        }
        roots[i] = z;
        root_weights[i] = 2.0 / (derivative * derivative);
    }

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (size_t i = 0; i < half; i++) {
        rule.nodes[i] = -roots[i];
        rule.weights[i] = root_weights[i];
        rule.nodes[n - 1 - i] = roots[i];
        rule.weights[n - 1 - i] = root_weights[i];
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    if (!std::is_sorted(rule.nodes.begin(), rule.nodes.end(), std::less_equal<>())) {
        throw DomainError("Gauss-Hermite nodes are not strictly increasing.");
    }
    return rule;
}

double integrate_on_grid(std::span<const double> values, const Grid &grid) {
    if (values.size() != grid.points) {
        throw DomainError(
            "integrate_on_grid: got " + std::to_string(values.size()) + " values for a grid of " +
            std::to_string(grid.points) + " points.");
    }
    double interior = 0;
    for (size_t k = 1; k + 1 < values.size(); k++) {
        interior += values[k];
    }
    return grid.spacing() * (interior + 0.5 * (values.front() + values.back()));
}

}  // namespace zpf
