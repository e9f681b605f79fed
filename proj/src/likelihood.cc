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

#include "qaeortho/likelihood.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qaeortho {

namespace {

struct SlotCosines {
    double p;  // cos(2(2m+1)theta)
    double q;  // cos(2(2m-3)theta); unused on Grover-only slots
};

SlotCosines slot_cosines(double theta, int m, bool ancillary) {
    SlotCosines cs{std::cos(double(2 * detail::grover_multiplier(m)) * theta), 0.0};
    if (ancillary) {
        cs.q = std::cos(double(2 * detail::ancillary_multiplier(m)) * theta);
    }
    return cs;
}

double clamp_probability(double p) { return std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp); }

template <typename Count>
double binomial_term(Count ones, std::int64_t shots, double p) {
    p = clamp_probability(p);
    const double h = static_cast<double>(ones);
    return h * std::log(p) + (static_cast<double>(shots) - h) * std::log(1.0 - p);
}

template <typename Count>
double slot_term(const BasicCountData<Count> &counts, std::size_t k, const SlotCosines &cs, double beta) {
    double value = binomial_term(counts.grover_ones[k], counts.schedule.n_shot, 0.5 - 0.5 * beta * cs.p);
    if (const auto &anc = counts.ancillary_ones[k]) {
        value += binomial_term(*anc, counts.schedule.n_shot_prime, 0.5 - 0.5 * beta * cs.q);
    }
    return value;
}

template <typename Count>
double raw_log_likelihood(const BasicCountData<Count> &counts, double theta, std::span<const double> beta) {
    double total = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const auto cs = slot_cosines(theta, counts.schedule.m[k], counts.ancillary_ones[k].has_value());
        total += slot_term(counts, k, cs, beta[k]);
    }
    return total;
}

template <typename Count>
double raw_ortho_log_likelihood(const BasicCountData<Count> &counts, double theta, const OrthoParams &c) {
    double total = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const auto cs = slot_cosines(theta, counts.schedule.m[k], counts.ancillary_ones[k].has_value());
        const double beta = detail::beta_from_factors(cs.p * cs.p, cs.q * cs.q, c[k]).value;
        total += slot_term(counts, k, cs, beta);
    }
    return total;
}

template <typename Count>
void check_ortho_inputs(const BasicCountData<Count> &counts, const OrthoParams &c) {
    counts.validate();
    if (c.size() != counts.size()) {
        throw DimensionError("c vector length does not match the counts");
    }
}

}  // namespace

template <typename Count>
double log_likelihood(const BasicCountData<Count> &counts, double theta, std::span<const double> beta) {
    counts.validate();
    detail::check_angle(theta);
    if (beta.size() != counts.size()) {
        throw DimensionError("beta length does not match the counts");
    }
    for (double b : beta) {
        if (!(b >= 0.0) || !std::isfinite(b)) {
            throw DomainError("beta must be finite and non-negative");
        }
    }
    return raw_log_likelihood(counts, theta, beta);
}

template <typename Count>
double log_likelihood(const BasicCountData<Count> &counts, double theta, const NoiseVector &beta) {
    return log_likelihood(counts, theta, std::span<const double>(beta.values()));
}

template <typename Count>
double ortho_log_likelihood(const BasicCountData<Count> &counts, double theta, const OrthoParams &c) {
    check_ortho_inputs(counts, c);
    detail::check_angle(theta);
    return raw_ortho_log_likelihood(counts, theta, c);
}

double ScanGrid::at(std::size_t i) const {
    if (i + 1 == points) {
        return hi;
    }
    return lo + step() * static_cast<double>(i);
}

void ScanGrid::validate() const {
    if (points < 2) {
        throw DomainError("scan grid needs at least two points");
    }
    if (!(lo >= 0.0 && hi <= half_pi<double> && lo < hi)) {
        throw DomainError("scan grid must satisfy 0 <= lo < hi <= pi/2");
    }
}

template <typename Count>
std::vector<ScanPoint> likelihood_scan(const BasicCountData<Count> &counts, const OrthoParams &c,
                                       const ScanGrid &grid) {
    grid.validate();
    check_ortho_inputs(counts, c);
    std::vector<ScanPoint> out(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double theta = grid.at(i);
        out[i] = {theta, raw_ortho_log_likelihood(counts, theta, c)};
    }
    return out;
}

template <typename Count>
EstimationResult mle_estimate(const BasicCountData<Count> &counts, const OrthoParams &c,
                              const EstimatorConfig &config) {
    if (!(config.refine_tolerance > 0.0)) {
        throw DomainError("refine_tolerance must be positive");
    }
    const ScanGrid grid{0.0, half_pi<double>, config.grid_points};
    const auto scan = likelihood_scan(counts, c, grid);

    std::size_t best = 0;
    double lowest = scan[0].value;
    for (std::size_t i = 1; i < scan.size(); ++i) {
        if (scan[i].value > scan[best].value) {
            best = i;
        }
        lowest = std::min(lowest, scan[i].value);
    }

    EstimationResult result;
    result.scan_resolution = grid.step();
    if (scan[best].value - lowest < 1e-12) {
        result.degenerate = true;
        result.theta_hat = 0.5 * (grid.lo + grid.hi);
        result.log_likelihood_at_max = raw_ortho_log_likelihood(counts, result.theta_hat, c);
        return result;
    }

    result.theta_hat = scan[best].theta;
    result.log_likelihood_at_max = scan[best].value;

    // Golden-section search on the two grid cells around the winner.
    double a = scan[best == 0 ? 0 : best - 1].theta;
    double b = scan[best + 1 == scan.size() ? best : best + 1].theta;
    auto objective = [&](double theta) { return raw_ortho_log_likelihood(counts, theta, c); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > config.refine_tolerance) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        }
    }
    const double refined_theta = 0.5 * (a + b);
    const double refined_value = objective(refined_theta);
    if (refined_value >= result.log_likelihood_at_max) {
        result.theta_hat = refined_theta;
        result.log_likelihood_at_max = refined_value;
        result.refined = true;
    }
    return result;
}

template double log_likelihood(const CountData &, double, const NoiseVector &);
template double log_likelihood(const ExpectedCounts &, double, const NoiseVector &);
template double log_likelihood(const CountData &, double, std::span<const double>);
template double log_likelihood(const ExpectedCounts &, double, std::span<const double>);
template double ortho_log_likelihood(const CountData &, double, const OrthoParams &);
template double ortho_log_likelihood(const ExpectedCounts &, double, const OrthoParams &);
template std::vector<ScanPoint> likelihood_scan(const CountData &, const OrthoParams &, const ScanGrid &);
template std::vector<ScanPoint> likelihood_scan(const ExpectedCounts &, const OrthoParams &, const ScanGrid &);
template EstimationResult mle_estimate(const CountData &, const OrthoParams &, const EstimatorConfig &);
template EstimationResult mle_estimate(const ExpectedCounts &, const OrthoParams &, const EstimatorConfig &);

}  // namespace qaeortho
