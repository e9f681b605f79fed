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

#ifndef QAEORTHO_SAMPLING_H
#define QAEORTHO_SAMPLING_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qaeortho/probability_model.h"

namespace qaeortho {

/// Counts of outcome "1" per schedule entry for the Grover and ancillary
/// circuits. These are sufficient statistics for the joint likelihood.
/// Ancillary slots are empty exactly where m_k = 0.
template <typename Count>
struct BasicCountData {
    Schedule schedule;
    std::vector<Count> grover_ones;
    std::vector<std::optional<Count>> ancillary_ones;

    std::size_t size() const { return grover_ones.size(); }

    /// Throws DimensionError on length/missing-slot mismatches and
    /// DomainError on counts outside [0, shots].
    void validate() const;

    BasicCountData prefix(std::size_t length) const;

    bool operator==(const BasicCountData &) const = default;
};

using CountData = BasicCountData<std::int64_t>;
/// Real-valued n p and n' q, used as noise-free synthetic data.
using ExpectedCounts = BasicCountData<double>;

extern template struct BasicCountData<std::int64_t>;
extern template struct BasicCountData<double>;

/// Generating model for synthetic data. It may differ from the fitting model.
struct TrueModelSpec {
    enum class Kind { explicit_beta, depolarizing, custom_curve };

    Kind kind = Kind::depolarizing;
    double theta_true = 0.0;
    NoiseVector beta;                 // explicit_beta and custom_curve
    DepolarizingSpec depolarizing;    // depolarizing
    /// Symmetric readout flip probability b in [0, 0.5); p -> (1-b)p + b(1-p).
    double readout_bias = 0.0;

    static TrueModelSpec explicit_beta(double theta, NoiseVector beta);
    static TrueModelSpec depolarizing_noise(double theta, double kappa, double readout_bias = 0.0);
    static TrueModelSpec custom_curve(double theta, NoiseVector beta, double readout_bias = 0.0);

    void validate(const Schedule &schedule) const;

    /// Decay amplitudes per schedule entry before readout error.
    NoiseVector noise_for(const Schedule &schedule) const;

    /// Amplitudes of the observed oscillation, (1 - 2b) beta_k. A symmetric
    /// readout flip only rescales the oscillation amplitude.
    NoiseVector effective_noise(const Schedule &schedule) const;

    /// Outcome-"1" probabilities actually sampled, per slot.
    std::vector<double> grover_probabilities(const Schedule &schedule) const;
    std::vector<std::optional<double>> ancillary_probabilities(const Schedule &schedule) const;
};

/// Counter-based stream splitting. derive_seed(parent, i) gives independent
/// child keys; counter_uniform(key, i) is the i-th uniform in [0, 1) of a key.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);
double counter_uniform(std::uint64_t key, std::uint64_t counter);

/// Number of u_i < p for i = 0..n-1 with u_i = counter_uniform(key, i).
std::int64_t bernoulli_count(std::uint64_t key, std::int64_t n, double p);

/// Substream key of circuit slot k: Grover circuits use index 2k, ancillary 2k+1.
std::uint64_t circuit_key(std::uint64_t seed, std::size_t k, bool ancillary);

CountData sample_counts(const TrueModelSpec &spec, const Schedule &schedule, std::uint64_t seed);

ExpectedCounts expected_counts(const TrueModelSpec &spec, const Schedule &schedule);

}  // namespace qaeortho

#endif
