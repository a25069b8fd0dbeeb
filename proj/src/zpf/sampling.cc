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

#include "zpf/sampling.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>

#include "zpf/errors.h"

namespace zpf {

double SampleRng::uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
}

double SampleRng::normal() {
    if (spare_normal_.has_value()) {
        double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(angle);
    return r * std::cos(angle);
}

namespace {

double gaussian_pdf(double u, double variance) {
    return std::exp(-0.5 * u * u / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

}  // namespace

RejectionEnvelope rejection_envelope(uint32_t level, unsigned max_level) {
    if (level > max_level) {
        throw DomainError(
            "Level " + std::to_string(level) + " exceeds the evaluation cap " + std::to_string(max_level) + ".");
    }
    double variance = (2.0 * level + 1.0) / 2.0;
    // The density and the Gaussian are both even, and past the outermost
    // classical turning point sqrt(2n+1) the density decays as exp(-u^2)
    // against the envelope's slower exp(-u^2/(2n+1)); scanning well beyond the
    // turning point captures the global maximum of the ratio.
    double u_end = std::sqrt(2.0 * level + 1.0) + 12.0;
    const double step = 1e-3;
    double best = 0;
    for (double u = 0; u <= u_end; u += step) {
        double phi = hermite_phi(level, u, max_level);
        double ratio = phi * phi / gaussian_pdf(u, variance);
        if (ratio > best) {
            best = ratio;
        }
    }
    return {variance, 1.05 * best};
}

SampleBatch sample_positions(
    EnergyEigenstate state, size_t count, uint64_t seed, const OscillatorParams &params, unsigned max_level) {
    params.validate();
    if (count == 0) {
        throw DomainError("Sample count must be at least 1.");
    }
    RejectionEnvelope env = rejection_envelope(state.level, max_level);
    double sigma = std::sqrt(env.variance);
    double length = std::sqrt(params.length_scale_squared());

    SampleBatch batch;
    batch.level_claimed = state.level;
    batch.seed = seed;
    batch.positions.reserve(count);

    SampleRng rng(seed);
    while (batch.positions.size() < count) {
        double u = sigma * rng.normal();
        double phi = hermite_phi(state.level, u, max_level);
        double target = phi * phi;
        double bound = env.scale * gaussian_pdf(u, env.variance);
        if (target > bound) {
            throw DomainError(
                "Rejection envelope fails to dominate the level-" + std::to_string(state.level) +
                " density at u = " + std::to_string(u) + ".");
        }
        if (rng.uniform() * bound < target) {
            batch.positions.push_back(u * length);
        }
    }
    return batch;
}

LevelInference infer_level(
    const SampleBatch &batch, uint32_t max_level, const OscillatorParams &params, unsigned level_cap) {
    params.validate();
    if (max_level > level_cap) {
        throw DomainError(
            "Candidate level " + std::to_string(max_level) + " exceeds the evaluation cap " +
            std::to_string(level_cap) + ".");
    }
    if (batch.positions.empty()) {
        throw DomainError("Cannot infer a level from an empty batch.");
    }
    double inv_len = params.inverse_length_scale();
    // log psi^2 = log phi^2 + log(inv_len): the Jacobian term is common to all
    // candidates but kept so the totals are true log-likelihoods.
    double log_jacobian = std::log(inv_len);

    LevelInference result;
    result.log_likelihoods.assign(max_level + 1, 0.0);
    std::vector<double> phi(max_level + 1);
    for (size_t i = 0; i < batch.positions.size(); i++) {
        hermite_phi_all(batch.positions[i] * inv_len, phi);
        bool any_positive = false;
        for (uint32_t n = 0; n <= max_level; n++) {
            double d = phi[n] * phi[n];
            any_positive |= d > 0;
            result.log_likelihoods[n] += std::log(d) + log_jacobian;
        }
        if (!any_positive) {
            throw DensityUnderflowError(
                i, "Every candidate density underflows to zero at sample " + std::to_string(i) + " (x = " +
                       std::to_string(batch.positions[i]) + ").");
        }
    }

    result.best = 0;
    for (uint32_t n = 1; n <= max_level; n++) {
        if (result.log_likelihoods[n] > result.log_likelihoods[result.best]) {
            result.best = n;
        }
    }
    return result;
}

double empirical_x2(const SampleBatch &batch) {
    if (batch.positions.empty()) {
        throw DomainError("empirical_x2 of an empty batch.");
    }
    double total = 0;
    for (double x : batch.positions) {
        total += x * x;
    }
    return total / double(batch.positions.size());
}

void write_batch_csv(std::ostream &out, const SampleBatch &batch) {
    out << "# level_claimed=";
    if (batch.level_claimed.has_value()) {
        out << *batch.level_claimed;
    } else {
        out << "unknown";
    }
    out << ",seed=" << batch.seed << ",sampler=v" << SampleRng::SAMPLER_VERSION << "\n";
    out << "x\n";
    char buf[64];
    for (double x : batch.positions) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
        out.write(buf, end - buf);
        out << "\n";
    }
}

namespace {

template <typename T>
T parse_number(std::string_view text, const char *what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError(std::string("Malformed ") + what + " '" + std::string(text) + "' in sample CSV.");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

}  // namespace

SampleBatch read_batch_csv(std::istream &in) {
    SampleBatch batch;
    std::string line;
    bool saw_seed = false;
    bool saw_header = false;
    while (std::getline(in, line)) {
        std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (view.front() == '#') {
            view.remove_prefix(1);
            while (!view.empty()) {
                size_t comma = view.find(',');
                std::string_view field = trim(view.substr(0, comma));
                view = comma == std::string_view::npos ? std::string_view() : view.substr(comma + 1);
                size_t eq = field.find('=');
                if (eq == std::string_view::npos) {
                    throw ValidationError("Malformed metadata field '" + std::string(field) + "' in sample CSV.");
                }
                std::string_view key = trim(field.substr(0, eq));
                std::string_view value = trim(field.substr(eq + 1));
                if (key == "level_claimed") {
                    if (value == "unknown") {
                        batch.level_claimed.reset();
                    } else {
                        batch.level_claimed = parse_number<uint32_t>(value, "level_claimed");
                    }
                } else if (key == "seed") {
                    batch.seed = parse_number<uint64_t>(value, "seed");
                    saw_seed = true;
                }
            }
            continue;
        }
        if (!saw_header) {
            if (view != "x") {
                throw ValidationError("Sample CSV must have an 'x' column header.");
            }
            saw_header = true;
            continue;
        }
        double x = parse_number<double>(view, "position");
        if (!std::isfinite(x)) {
            throw ValidationError("Non-finite position in sample CSV.");
        }
        batch.positions.push_back(x);
    }
    if (!saw_seed) {
        throw ValidationError("Sample CSV is missing the seed metadata line.");
    }
    if (batch.positions.empty()) {
        throw ValidationError("Sample CSV contains no positions.");
    }
    return batch;
}

}  // namespace zpf
