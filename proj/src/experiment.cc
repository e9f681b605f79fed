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

#include "qaeortho/experiment.h"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace qaeortho {

namespace {

constexpr std::uint64_t kRandomCStream = 0xC0FFEE;

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double model_crlb(const TrueModelSpec &model, const Schedule &schedule) {
    try {
        return crlb_theta(fisher_matrix(model.theta_true, model.effective_noise(schedule), schedule));
    } catch (const SingularityError &) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    true_model.validate(schedule);
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (fit_c && fit_c->size() != schedule.size()) {
        throw DimensionError("fit c vector length does not match the schedule");
    }
    if (estimator.grid_points < 3) {
        throw DomainError("estimator grid needs at least three points");
    }
    if (!(estimator.refine_tolerance > 0.0)) {
        throw DomainError("refine_tolerance must be positive");
    }
}

unsigned resolve_threads(unsigned requested) {
    unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (const char *cap = std::getenv("QAEORTHO_THREADS")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(cap, &end, 10);
        if (end != cap && *end == '\0' && v > 0) {
            threads = std::min(threads, static_cast<unsigned>(std::min<unsigned long>(v, 1u << 16)));
        }
    }
    return threads;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) { return derive_seed(master_seed, trial); }

OrthoParams random_ortho_params(std::uint64_t seed, std::size_t size) {
    const std::uint64_t key = derive_seed(seed, kRandomCStream);
    std::vector<double> c(size);
    for (std::size_t k = 0; k < size; ++k) {
        c[k] = counter_uniform(key, k);
    }
    return OrthoParams(std::move(c));
}

std::vector<TrialRecord> run_trials(const ExperimentConfig &config) {
    config.validate();
    std::vector<TrialRecord> out(config.trials);
    parallel_for(config.trials, resolve_threads(config.threads), [&](std::size_t i) {
        TrialRecord &rec = out[i];
        rec.index = i;
        rec.seed = trial_seed(config.master_seed, i);
        rec.c = config.fit_c ? *config.fit_c : random_ortho_params(rec.seed, config.schedule.size());
        rec.counts = sample_counts(config.true_model, config.schedule, rec.seed);
        rec.estimate = mle_estimate(rec.counts, rec.c, config.estimator);
    });
    return out;
}

double rmse(const std::vector<EstimationResult> &estimates, double theta_true, std::size_t *n_used) {
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto &e : estimates) {
        if (e.degenerate) {
            continue;
        }
        const double d = e.theta_hat - theta_true;
        sum += d * d;
        ++used;
    }
    if (n_used) {
        *n_used = used;
    }
    return used == 0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(sum / static_cast<double>(used));
}

ErrorCurve error_curve(const ExperimentConfig &config, const std::vector<TrialRecord> &trials) {
    config.validate();
    const std::size_t M = config.schedule.size();
    // estimates[prefix - 1][trial]
    std::vector<std::vector<EstimationResult>> estimates(M, std::vector<EstimationResult>(trials.size()));
    parallel_for(trials.size(), resolve_threads(config.threads), [&](std::size_t i) {
        const TrialRecord &rec = trials[i];
        for (std::size_t len = 1; len <= M; ++len) {
            estimates[len - 1][i] = len == M ? rec.estimate
                                             : mle_estimate(rec.counts.prefix(len), rec.c.prefix(len), config.estimator);
        }
    });

    ErrorCurve curve;
    const std::int64_t shots_per_k = config.schedule.n_shot + config.schedule.n_shot_prime;
    for (std::size_t len = 1; len <= M; ++len) {
        const Schedule sched = config.schedule.prefix(len);
        ErrorCurveRow row;
        row.prefix = len;
        row.n_queries = query_count(sched, config.accounting);
        row.rmse = rmse(estimates[len - 1], config.true_model.theta_true, &row.n_trials);
        row.n_degenerate = trials.size() - row.n_trials;
        row.crlb_model = model_crlb(config.true_model, sched);
        row.crlb_classical = classical_crlb(row.n_queries);
        row.crlb_noiseless = noiseless_crlb(sched, shots_per_k);
        curve.rows.push_back(row);
    }
    return curve;
}

ErrorCurve error_curve(const ExperimentConfig &config) { return error_curve(config, run_trials(config)); }

double log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DimensionError("log_log_slope needs two equally long series of length >= 2");
    }
    double mx = 0.0, my = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace qaeortho
