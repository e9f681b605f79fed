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

#ifndef QAEORTHO_EXPERIMENT_H
#define QAEORTHO_EXPERIMENT_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qaeortho/fisher.h"
#include "qaeortho/likelihood.h"
#include "qaeortho/sampling.h"

namespace qaeortho {

struct ExperimentConfig {
    TrueModelSpec true_model;
    /// Fixed fitting coordinates; empty means a fresh uniform c per trial.
    std::optional<OrthoParams> fit_c;
    Schedule schedule;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    EstimatorConfig estimator;
    QueryAccounting accounting = QueryAccounting::paper;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;

    void validate() const;
};

struct TrialRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    OrthoParams c;
    CountData counts;
    EstimationResult estimate;
};

struct ErrorCurveRow {
    std::size_t prefix = 0;
    std::int64_t n_queries = 0;
    double rmse = 0.0;
    double crlb_model = 0.0;
    double crlb_classical = 0.0;
    double crlb_noiseless = 0.0;
    std::size_t n_trials = 0;
    std::size_t n_degenerate = 0;
};

struct ErrorCurve {
    std::vector<ErrorCurveRow> rows;
};

/// Seed of trial i: derive_seed(master_seed, i).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

/// Uniform c in [0, 1) per entry drawn from the trial's own substream.
OrthoParams random_ortho_params(std::uint64_t trial_seed, std::size_t size);

/// Samples and fits every trial. Output is sorted by trial index and does
/// not depend on the thread count.
std::vector<TrialRecord> run_trials(const ExperimentConfig &config);

/// RMSE over non-degenerate estimates, sqrt(mean (theta_hat - theta)^2).
double rmse(const std::vector<EstimationResult> &estimates, double theta_true, std::size_t *n_used = nullptr);

/// Per-prefix RMSE of the trials' data truncated to the first M' entries,
/// with the model, classical and noiseless reference bounds.
ErrorCurve error_curve(const ExperimentConfig &config, const std::vector<TrialRecord> &trials);
ErrorCurve error_curve(const ExperimentConfig &config);

/// Thread count after applying the QAEORTHO_THREADS cap.
unsigned resolve_threads(unsigned requested);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace qaeortho

#endif
