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

#ifndef QAEORTHO_LIKELIHOOD_H
#define QAEORTHO_LIKELIHOOD_H

#include <span>
#include <vector>

#include "qaeortho/orthogonalization.h"
#include "qaeortho/sampling.h"

namespace qaeortho {

/// Probabilities are clamped to [eps, 1 - eps] before taking logs.
inline constexpr double kProbabilityClamp = 1e-12;

/// Joint binomial log-likelihood of Grover and ancillary counts, without the
/// binomial coefficients. Missing ancillary slots contribute nothing.
template <typename Count>
double log_likelihood(const BasicCountData<Count> &counts, double theta, const NoiseVector &beta);

/// Same objective with raw amplitudes. Values above 1 are accepted as long as
/// every slot probability stays in [0, 1]; the orthogonalized coordinates
/// produce such amplitudes.
template <typename Count>
double log_likelihood(const BasicCountData<Count> &counts, double theta, std::span<const double> beta);

/// Profile objective in theta with the nuisance coordinates held at c:
/// log_likelihood(counts, theta, beta_from_c(theta, c)).
template <typename Count>
double ortho_log_likelihood(const BasicCountData<Count> &counts, double theta, const OrthoParams &c);

struct ScanGrid {
    double lo = 0.0;
    double hi = half_pi<double>;
    std::size_t points = 10000;

    double step() const { return (hi - lo) / static_cast<double>(points - 1); }
    double at(std::size_t i) const;
    void validate() const;
};

struct ScanPoint {
    double theta;
    double value;
};

template <typename Count>
std::vector<ScanPoint> likelihood_scan(const BasicCountData<Count> &counts, const OrthoParams &c,
                                       const ScanGrid &grid);

struct EstimatorConfig {
    std::size_t grid_points = 10000;
    double refine_tolerance = 1e-9;
};

struct EstimationResult {
    double theta_hat = 0.0;
    double log_likelihood_at_max = 0.0;
    double scan_resolution = 0.0;
    bool refined = false;
    /// The profile likelihood is flat over the grid (max - min < 1e-12).
    bool degenerate = false;
};

/// Global grid search over [0, pi/2] followed by golden-section refinement
/// inside the bracket around the best grid point. Grid ties go to the
/// smallest theta. Degenerate inputs return theta_hat = pi/4.
template <typename Count>
EstimationResult mle_estimate(const BasicCountData<Count> &counts, const OrthoParams &c,
                              const EstimatorConfig &config = {});

extern template double log_likelihood(const CountData &, double, const NoiseVector &);
extern template double log_likelihood(const ExpectedCounts &, double, const NoiseVector &);
extern template double log_likelihood(const CountData &, double, std::span<const double>);
extern template double log_likelihood(const ExpectedCounts &, double, std::span<const double>);
extern template double ortho_log_likelihood(const CountData &, double, const OrthoParams &);
extern template double ortho_log_likelihood(const ExpectedCounts &, double, const OrthoParams &);
extern template std::vector<ScanPoint> likelihood_scan(const CountData &, const OrthoParams &, const ScanGrid &);
extern template std::vector<ScanPoint> likelihood_scan(const ExpectedCounts &, const OrthoParams &,
                                                       const ScanGrid &);
extern template EstimationResult mle_estimate(const CountData &, const OrthoParams &, const EstimatorConfig &);
extern template EstimationResult mle_estimate(const ExpectedCounts &, const OrthoParams &,
                                              const EstimatorConfig &);

}  // namespace qaeortho

#endif
