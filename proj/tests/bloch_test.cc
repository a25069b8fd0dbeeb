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
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "zpf/errors.h"

using namespace zpf;

namespace {

constexpr double PI = std::numbers::pi;

BlochVector random_unit(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> phi_dist(0.0, 2 * PI);
    double z = z_dist(rng);
    double phi = phi_dist(rng);
    double r = std::sqrt(1 - z * z);
    return BlochVector::make(r * std::cos(phi), r * std::sin(phi), z);
}

void expect_vec_near(const BlochVector &v, double x, double y, double z, double tol) {
    EXPECT_NEAR(v.nx(), x, tol);
    EXPECT_NEAR(v.ny(), y, tol);
    EXPECT_NEAR(v.nz(), z, tol);
}

}  // namespace

TEST(bloch, from_angles_poles_and_equator) {
    EXPECT_EQ(bloch_from_angles(0, 0), BlochVector::make(0, 0, 1));
    expect_vec_near(bloch_from_angles(PI, 0), 0, 0, -1, 1e-12);
    expect_vec_near(bloch_from_angles(PI / 2, 0), 1, 0, 0, 1e-12);
    expect_vec_near(bloch_from_angles(PI / 2, PI / 2), 0, 1, 0, 1e-12);
}

TEST(bloch, from_angles_wraps_out_of_range) {
    auto a = bloch_from_angles(0.4, 1.0);
    expect_vec_near(bloch_from_angles(0.4, 1.0 + 2 * PI), a.nx(), a.ny(), a.nz(), 1e-12);
    expect_vec_near(bloch_from_angles(0.4, 1.0 - 4 * PI), a.nx(), a.ny(), a.nz(), 1e-12);
    // theta -> -theta is the same point seen with phi + pi.
    expect_vec_near(bloch_from_angles(-0.4, 1.0 + PI), a.nx(), a.ny(), a.nz(), 1e-12);
}

TEST(bloch, from_angles_unit_norm) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int k = 0; k < 1000; k++) {
        auto v = bloch_from_angles(dist(rng), dist(rng));
        EXPECT_NEAR(v.dot(v), 1.0, 1e-12);
    }
}

TEST(bloch, rejects_bad_vectors) {
    EXPECT_THROW(bloch_from_angles(NAN, 0), DomainError);
    EXPECT_THROW(bloch_from_angles(0, INFINITY), DomainError);
    EXPECT_THROW(BlochVector::make(0, 0, 1.001), DomainError);
    EXPECT_THROW(BlochVector::make(0.5, 0.5, 0.5), DomainError);
    EXPECT_NO_THROW(BlochVector::make(0, 0, 1 + 1e-10));
}

TEST(bloch, expectation_examples) {
    auto up = BlochVector::make(0, 0, 1);
    auto down = BlochVector::make(0, 0, -1);
    auto x = BlochVector::make(1, 0, 0);
    EXPECT_EQ(expectation(up, up), 1.0);
    EXPECT_EQ(expectation(up, down), -1.0);
    EXPECT_EQ(expectation(x, up), 0.0);
}

TEST(bloch, outcome_probability_examples) {
    auto up = BlochVector::make(0, 0, 1);
    auto down = BlochVector::make(0, 0, -1);
    auto x = BlochVector::make(1, 0, 0);
    auto p = outcome_probabilities(up, up);
    EXPECT_EQ(p.p_plus, 1.0);
    EXPECT_EQ(p.p_minus, 0.0);
    p = outcome_probabilities(up, down);
    EXPECT_EQ(p.p_plus, 0.0);
    EXPECT_EQ(p.p_minus, 1.0);
    p = outcome_probabilities(x, up);
    EXPECT_EQ(p.p_plus, 0.5);
    EXPECT_EQ(p.p_minus, 0.5);
}

TEST(bloch, interpret_examples) {
    EXPECT_EQ(interpret({BlochVector::make(0, 0, -1), SpinOutcome::MINUS}), BlochVector::make(0, 0, 1));
    EXPECT_EQ(interpret({BlochVector::make(0, 0, 1), SpinOutcome::PLUS}), BlochVector::make(0, 0, 1));
    EXPECT_EQ(interpret({BlochVector::make(1, 0, 0), SpinOutcome::MINUS}), BlochVector::make(-1, 0, 0));
}

TEST(bloch, frame_flip_antisymmetry) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 2000; k++) {
        auto s = random_unit(rng);
        auto f = random_unit(rng);
        EXPECT_EQ(expectation(s, -f), -expectation(s, f));
    }
}

TEST(bloch, deterministic_outcomes_infer_same_direction_under_flipped_frames) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 500; k++) {
        auto s = random_unit(rng);
        // The state is an eigenvector of both s.sigma and (-s).sigma.
        for (const auto &frame : {s, -s}) {
            auto probs = outcome_probabilities(s, frame);
            SpinOutcome outcome = probs.p_plus > probs.p_minus ? SpinOutcome::PLUS : SpinOutcome::MINUS;
            ASSERT_GT(std::max(probs.p_plus, probs.p_minus), 1.0 - 1e-12);
            EXPECT_EQ(interpret({frame, outcome}), s);
        }
    }
}

TEST(bloch, probabilities_normalized_and_non_negative) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5000; k++) {
        auto p = outcome_probabilities(random_unit(rng), random_unit(rng));
        EXPECT_GE(p.p_plus, 0.0);
        EXPECT_GE(p.p_minus, 0.0);
        EXPECT_EQ(p.p_plus + p.p_minus, 1.0);
    }
}
