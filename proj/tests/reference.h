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

#ifndef QAEORTHO_TESTS_REFERENCE_H
#define QAEORTHO_TESTS_REFERENCE_H

// Brute-force joint (theta, beta) maximum likelihood. Test-only reference.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qaeortho/likelihood.h"

namespace qaeortho::testing {

// Per-slot log-likelihood in beta at fixed theta. Concave in beta because
// both circuit probabilities are affine in beta.
template <typename Count>
double slot_loglik(const BasicCountData<Count> &counts, std::size_t k, double theta, double beta) {
    const int m = counts.schedule.m[k];
    auto term = [](double ones, double shots, double p) {
        p = std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp);
        return ones * std::log(p) + (shots - ones) * std::log1p(-p);
    };
    double v = term(static_cast<double>(counts.grover_ones[k]), static_cast<double>(counts.schedule.n_shot),
                    detail::oscillation(theta, beta, detail::grover_multiplier(m)));
    if (counts.ancillary_ones[k]) {
        v += term(static_cast<double>(*counts.ancillary_ones[k]), static_cast<double>(counts.schedule.n_shot_prime),
                  detail::oscillation(theta, beta, detail::ancillary_multiplier(m)));
    }
    return v;
}

template <typename Count>
double slot_profile(const BasicCountData<Count> &counts, std::size_t k, double theta) {
    double a = 0.0, b = 1.0;
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = slot_loglik(counts, k, theta, x1), f2 = slot_loglik(counts, k, theta, x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = slot_loglik(counts, k, theta, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = slot_loglik(counts, k, theta, x1);
        }
    }
    const double mid = 0.5 * (a + b);
    return std::max({slot_loglik(counts, k, theta, mid), slot_loglik(counts, k, theta, 0.0),
                     slot_loglik(counts, k, theta, 1.0)});
}

template <typename Count>
double joint_profile(const BasicCountData<Count> &counts, double theta) {
    double v = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        v += slot_profile(counts, k, theta);
    }
    return v;
}

// Grid search followed by golden-section refinement on the winning cell.
template <typename Count>
double joint_ml_theta(const BasicCountData<Count> &counts, std::size_t grid_points = 4000) {
    const double step = half_pi<double> / static_cast<double>(grid_points - 1);
    std::size_t best = 0;
    double best_v = -INFINITY;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double v = joint_profile(counts, step * static_cast<double>(i));
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double a = step * static_cast<double>(best == 0 ? 0 : best - 1);
    double b = std::min(half_pi<double>, step * static_cast<double>(best + 1));
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = joint_profile(counts, x1), f2 = joint_profile(counts, x2);
    while (b - a > 1e-9) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = joint_profile(counts, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = joint_profile(counts, x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace qaeortho::testing

#endif
