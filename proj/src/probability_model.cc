// Copyright 2026 The qaeortho Authors
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

#include "qaeortho/probability_model.h"

#include <algorithm>

#include "qaeortho/orthogonalization.h"

namespace qaeortho {

int Schedule::max_m() const { return m.empty() ? 0 : *std::max_element(m.begin(), m.end()); }

Schedule Schedule::prefix(std::size_t length) const {
    if (length == 0 || length > m.size()) {
        throw DimensionError("schedule prefix length out of range");
    }
    return Schedule{std::vector<int>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(length)), n_shot,
                    n_shot_prime};
}

void Schedule::validate() const {
    if (m.empty()) {
        throw DomainError("schedule must contain at least one entry");
    }
    for (int mk : m) {
        if (mk < 0) {
            throw DomainError("schedule entries must be non-negative");
        }
    }
    if (n_shot < 1 || n_shot_prime < 1) {
        throw DomainError("shot counts must be positive");
    }
}

Schedule Schedule::exponential(std::size_t length, std::int64_t n_shot, std::int64_t n_shot_prime) {
    Schedule s{{}, n_shot, n_shot_prime};
    for (std::size_t k = 0; k < length; ++k) {
        s.m.push_back(1 << k);
    }
    return s;
}

NoiseVector::NoiseVector(std::vector<double> beta) : beta_(std::move(beta)) {
    for (double b : beta_) {
        detail::check_amplitude(b);
    }
}

NoiseVector depolarizing_noise(const DepolarizingSpec &spec, const Schedule &schedule) {
    std::vector<double> beta;
    beta.reserve(schedule.size());
    for (int mk : schedule.m) {
        beta.push_back(depolarizing_beta(spec, mk));
    }
    return NoiseVector(std::move(beta));
}

OrthoParams::OrthoParams(std::vector<double> c) : c_(std::move(c)) {
    for (double ck : c_) {
        detail::check_c(ck);
    }
}

OrthoParams OrthoParams::constant(std::size_t size, double value) {
    return OrthoParams(std::vector<double>(size, value));
}

OrthoParams OrthoParams::prefix(std::size_t length) const {
    if (length == 0 || length > c_.size()) {
        throw DimensionError("c prefix length out of range");
    }
    return OrthoParams(std::vector<double>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::vector<double> ortho_betas(double theta, const OrthoParams &c, const Schedule &schedule) {
    if (c.size() != schedule.size()) {
        throw DimensionError("c vector length does not match the schedule");
    }
    std::vector<double> beta(schedule.size());
    for (std::size_t k = 0; k < beta.size(); ++k) {
        beta[k] = beta_from_c(theta, c[k], schedule.m[k]).value;
    }
    return beta;
}

}  // namespace qaeortho
