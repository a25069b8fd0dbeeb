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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace zpf;

TEST(oscillator, eigenenergy_examples) {
    EXPECT_EQ(eigenenergy({0}, {}), 0.5);
    EXPECT_EQ(eigenenergy({3}, {1.0, 2.0, 1.0}), 7.0);
    EXPECT_EQ(eigenenergy({10}, {}), 10.5);
}

TEST(oscillator, position_density_examples) {
    EXPECT_NEAR(position_density({0}, 0.0, {}), 1 / std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_EQ(position_density({1}, 0.0, {}), 0.0);
    EXPECT_NEAR(position_density({1}, 1.0, {}), 2 / std::sqrt(std::numbers::pi) * std::exp(-1.0), 1e-15);
    EXPECT_NEAR(position_density({1}, 1.0, {}), 0.41510749742059470, 1e-15);
}

TEST(oscillator, density_normalized_to_level_30) {
    // Composite trapezoid on a wide grid; the densities are smooth and decay
    // faster than any power, so trapezoid converges spectrally.
    for (uint32_t n = 0; n <= 30; n++) {
        double half = std::sqrt(2.0 * n + 1.0) + 10.0;
        auto grid = Grid::make(-half, half, 8001);
        std::vector<double> values;
        for (const auto &s : density_grid({n}, grid, {})) {
            values.push_back(s.density);
        }
        EXPECT_NEAR(integrate_on_grid(values, grid), 1.0, 1e-8) << "n=" << n;
    }
}

TEST(oscillator, density_grid_shapes) {
    auto grid = Grid::make(-5, 5, 401);
    auto local_maxima = [](const std::vector<DensitySample> &t) {
        int count = 0;
        for (size_t i = 1; i + 1 < t.size(); i++) {
            if (t[i].density > t[i - 1].density && t[i].density > t[i + 1].density) {
                count++;
            }
        }
        return count;
    };
    auto g0 = density_grid({0}, grid, {});
    EXPECT_EQ(local_maxima(g0), 1);
    EXPECT_EQ(g0[200].x, 0.0);
    for (const auto &s : g0) {
        EXPECT_LE(s.density, g0[200].density);
    }
    auto g1 = density_grid({1}, grid, {});
    EXPECT_EQ(local_maxima(g1), 2);
    EXPECT_EQ(g1[200].density, 0.0);
    EXPECT_EQ(local_maxima(density_grid({3}, grid, {})), 4);
}

TEST(oscillator, node_count_matches_level) {
    for (uint32_t n = 0; n <= 25; n++) {
        double half = std::sqrt(2.0 * n + 1.0) + 2.0;
        auto grid = Grid::make(-half, half, 20001);
        std::vector<double> psi;
        for (double x : grid.coordinates()) {
            psi.push_back(hermite_psi(n, x, {}));
        }
        EXPECT_EQ(zpf_oracles::sign_changes(psi), int(n)) << "n=" << n;
    }
}

TEST(oscillator, x2_expectation_closed_form) {
    EXPECT_EQ(x2_expectation({0}, {}), 0.5);
    EXPECT_EQ(x2_expectation({2}, {}), 2.5);
    EXPECT_EQ(x2_expectation({2}, {2.0, 0.5, 3.0}), 7.5);
}

TEST(oscillator, x2_expectation_by_quadrature) {
    auto rule = gauss_hermite_rule(64);
    for (uint32_t n = 0; n <= 20; n++) {
        double total = 0;
        for (size_t i = 0; i < rule.size(); i++) {
            double p = zpf_oracles::closed_form_phi(n, rule.nodes[i]) * std::exp(0.5 * rule.nodes[i] * rule.nodes[i]);
            total += rule.weights[i] * rule.nodes[i] * rule.nodes[i] * p * p;
        }
        EXPECT_NEAR(total, x2_expectation({n}, {}), 1e-6) << "n=" << n;
    }
}

TEST(oscillator, virial_identity) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> pos(0.2, 5.0);
    for (int k = 0; k < 200; k++) {
        OscillatorParams p{pos(rng), pos(rng), pos(rng)};
        uint32_t n = uint32_t(rng() % 50);
        double potential = 0.5 * p.mass * p.omega * p.omega * x2_expectation({n}, p);
        EXPECT_NEAR(potential, eigenenergy({n}, p) / 2, 1e-12 * eigenenergy({n}, p));
    }
}

TEST(oscillator, lambda_ladder) {
    EXPECT_EQ(lambda_of(0, {}).value, 1.0);
    EXPECT_EQ(lambda_of(1, {}).value, 3.0);
    EXPECT_EQ(lambda_of(1, {}).value - lambda_of(0, {}).value, 2.0);
    EXPECT_EQ(lambda_spacing({}), 2.0);
    OscillatorParams p{2.0, 4.0, 1.0};
    for (uint32_t k = 0; k < 10; k++) {
        EXPECT_NEAR(lambda_of(k + 1, p).value - lambda_of(k, p).value, 2 * p.hbar / (p.mass * p.omega), 1e-15);
        // lambda_k is twice <x^2> of level k.
        EXPECT_EQ(lambda_of(k, p).value, 2 * x2_expectation({k}, p));
    }
}

TEST(oscillator, measure_examples) {
    auto r = measure({0}, {0}, {});
    EXPECT_TRUE(r.in_support);
    EXPECT_EQ(r.lambda_outcome, 0.0);
    EXPECT_EQ(*r.eigenvalue_outcome, 0.5);

    r = measure({1}, {0}, {});
    EXPECT_EQ(r.lambda_outcome, 2.0);

    r = measure({1}, {1}, {});
    EXPECT_EQ(r.lambda_outcome, 0.0);

    r = measure({5}, {2}, {});
    auto oracle = zpf_oracles::apply_to_basis(zpf_oracles::shifted_observable_matrix(2, 32), 5);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(*r.eigenvalue_outcome, *oracle);
    EXPECT_EQ(*r.eigenvalue_outcome, 3.5);
}

TEST(oscillator, measure_out_of_support) {
    auto r = measure({1}, {3}, {});
    EXPECT_FALSE(r.in_support);
    EXPECT_FALSE(r.eigenvalue_outcome.has_value());
    EXPECT_EQ(r.lambda_outcome, -4.0);
    EXPECT_EQ(r.frame, FrameOffset{3});
}

TEST(oscillator, frame_shift_covariance) {
    OscillatorParams p{1.3, 0.7, 2.1};
    for (uint32_t n = 0; n <= 12; n++) {
        for (uint32_t ell = 0; ell <= 12; ell++) {
            auto base = measure({n}, {ell}, p);
            for (uint32_t k = 0; k <= 12; k++) {
                auto shifted = measure({n + k}, {ell + k}, p);
                EXPECT_EQ(shifted.lambda_outcome, base.lambda_outcome);
                EXPECT_EQ(shifted.eigenvalue_outcome, base.eigenvalue_outcome);
                EXPECT_EQ(shifted.in_support, base.in_support);
            }
        }
    }
}

TEST(oscillator, lambda_eigenvalue_consistency) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> pos(0.1, 10.0);
    for (int k = 0; k < 1000; k++) {
        OscillatorParams p{pos(rng), pos(rng), pos(rng)};
        uint32_t n = uint32_t(rng() % 100), ell = uint32_t(rng() % 100);
        auto r = measure({n}, {ell}, p);
        EXPECT_EQ(r.in_support, n >= ell);
        if (r.in_support) {
            double e0 = eigenenergy({0}, p);
            double expected = 2 * (*r.eigenvalue_outcome - e0) / (p.mass * p.omega * p.omega);
            EXPECT_NEAR(r.lambda_outcome, expected, 1e-12 * std::max(1.0, std::abs(expected)));
            EXPECT_NEAR(r.lambda_outcome, lambda_of(n, p).value - lambda_of(ell, p).value,
                        1e-12 * std::max(1.0, lambda_of(n, p).value));
        }
    }
}

TEST(oscillator, dense_operator_agreement) {
    for (uint32_t ell = 0; ell <= 10; ell++) {
        auto matrix = zpf_oracles::shifted_observable_matrix(ell, 32);
        for (uint32_t n = 0; n <= 10; n++) {
            auto oracle = zpf_oracles::apply_to_basis(matrix, n);
            auto r = measure({n}, {ell}, {});
            ASSERT_EQ(oracle.has_value(), r.in_support) << n << "," << ell;
            if (oracle) {
                EXPECT_NEAR(*r.eigenvalue_outcome, *oracle, 1e-12);
            }
        }
    }
}
