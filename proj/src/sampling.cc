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

#include "qaeortho/sampling.h"

#include <string>

namespace qaeortho {

template <typename Count>
void BasicCountData<Count>::validate() const {
    schedule.validate();
    if (grover_ones.size() != schedule.size() || ancillary_ones.size() != schedule.size()) {
        throw DimensionError("count vectors must match the schedule length");
    }
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (grover_ones[k] < Count(0) || grover_ones[k] > Count(schedule.n_shot)) {
            throw DomainError("grover count " + std::to_string(k) + " outside [0, n_shot]");
        }
        const auto &anc = ancillary_ones[k];
        if (anc.has_value() != schedule.has_ancillary(k)) {
            throw DimensionError("ancillary slot " + std::to_string(k) +
                                 " must be present exactly when m_k >= 1");
        }
        if (anc && (*anc < Count(0) || *anc > Count(schedule.n_shot_prime))) {
            throw DomainError("ancillary count " + std::to_string(k) + " outside [0, n_shot_prime]");
        }
    }
}

template <typename Count>
BasicCountData<Count> BasicCountData<Count>::prefix(std::size_t length) const {
    BasicCountData out;
    out.schedule = schedule.prefix(length);
    out.grover_ones.assign(grover_ones.begin(), grover_ones.begin() + static_cast<std::ptrdiff_t>(length));
    out.ancillary_ones.assign(ancillary_ones.begin(), ancillary_ones.begin() + static_cast<std::ptrdiff_t>(length));
    return out;
}

template struct BasicCountData<std::int64_t>;
template struct BasicCountData<double>;

TrueModelSpec TrueModelSpec::explicit_beta(double theta, NoiseVector beta) {
    TrueModelSpec s;
    s.kind = Kind::explicit_beta;
    s.theta_true = theta;
    s.beta = std::move(beta);
    return s;
}

TrueModelSpec TrueModelSpec::depolarizing_noise(double theta, double kappa, double readout_bias) {
    TrueModelSpec s;
    s.kind = Kind::depolarizing;
    s.theta_true = theta;
    s.depolarizing.kappa = kappa;
    s.readout_bias = readout_bias;
    return s;
}

TrueModelSpec TrueModelSpec::custom_curve(double theta, NoiseVector beta, double readout_bias) {
    TrueModelSpec s;
    s.kind = Kind::custom_curve;
    s.theta_true = theta;
    s.beta = std::move(beta);
    s.readout_bias = readout_bias;
    return s;
}

void TrueModelSpec::validate(const Schedule &schedule) const {
    schedule.validate();
    detail::check_angle(theta_true);
    if (!(readout_bias >= 0.0 && readout_bias < 0.5)) {
        throw DomainError("readout bias must lie in [0, 0.5)");
    }
    switch (kind) {
        case Kind::explicit_beta:
            if (readout_bias != 0.0) {
                throw DomainError("explicit-beta models carry no readout bias");
            }
            [[fallthrough]];
        case Kind::custom_curve:
            if (beta.size() != schedule.size()) {
                throw DimensionError("true-model beta length does not match the schedule");
            }
            break;
        case Kind::depolarizing:
            if (!(depolarizing.kappa >= 0.0)) {
                throw DomainError("kappa must be non-negative");
            }
            break;
    }
}

NoiseVector TrueModelSpec::noise_for(const Schedule &schedule) const {
    validate(schedule);
    if (kind == Kind::depolarizing) {
        return qaeortho::depolarizing_noise(depolarizing, schedule);
    }
    return beta;
}

NoiseVector TrueModelSpec::effective_noise(const Schedule &schedule) const {
    std::vector<double> b = noise_for(schedule).values();
    for (double &bk : b) {
        bk *= 1.0 - 2.0 * readout_bias;
    }
    return NoiseVector(std::move(b));
}

namespace {

double apply_readout(double p, double bias) { return (1.0 - bias) * p + bias * (1.0 - p); }

}  // namespace

std::vector<double> TrueModelSpec::grover_probabilities(const Schedule &schedule) const {
    const NoiseVector noise = noise_for(schedule);
    std::vector<double> p(schedule.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = apply_readout(grover_prob(theta_true, noise[k], schedule.m[k]), readout_bias);
    }
    return p;
}

std::vector<std::optional<double>> TrueModelSpec::ancillary_probabilities(const Schedule &schedule) const {
    const NoiseVector noise = noise_for(schedule);
    std::vector<std::optional<double>> q(schedule.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (schedule.has_ancillary(k)) {
            q[k] = apply_readout(ancillary_prob(theta_true, noise[k], schedule.m[k]), readout_bias);
        }
    }
    return q;
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
    return mix64(mix64(parent) ^ mix64(index * kGolden + 0x632BE59BD9B4E019ULL));
}

double counter_uniform(std::uint64_t key, std::uint64_t counter) {
    // splitmix64 output number `counter` of the stream started at `key`.
    return static_cast<double>(mix64(key + (counter + 1) * kGolden) >> 11) * 0x1.0p-53;
}

std::int64_t bernoulli_count(std::uint64_t key, std::int64_t n, double p) {
    std::int64_t ones = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        ones += counter_uniform(key, static_cast<std::uint64_t>(i)) < p ? 1 : 0;
    }
    return ones;
}

std::uint64_t circuit_key(std::uint64_t seed, std::size_t k, bool ancillary) {
    return derive_seed(seed, 2 * static_cast<std::uint64_t>(k) + (ancillary ? 1 : 0));
}

CountData sample_counts(const TrueModelSpec &spec, const Schedule &schedule, std::uint64_t seed) {
    const auto p = spec.grover_probabilities(schedule);
    const auto q = spec.ancillary_probabilities(schedule);
    CountData out;
    out.schedule = schedule;
    out.grover_ones.resize(schedule.size());
    out.ancillary_ones.resize(schedule.size());
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        out.grover_ones[k] = bernoulli_count(circuit_key(seed, k, false), schedule.n_shot, p[k]);
        if (q[k]) {
            out.ancillary_ones[k] = bernoulli_count(circuit_key(seed, k, true), schedule.n_shot_prime, *q[k]);
        }
    }
    return out;
}

ExpectedCounts expected_counts(const TrueModelSpec &spec, const Schedule &schedule) {
    const auto p = spec.grover_probabilities(schedule);
    const auto q = spec.ancillary_probabilities(schedule);
    ExpectedCounts out;
    out.schedule = schedule;
    out.grover_ones.resize(schedule.size());
    out.ancillary_ones.resize(schedule.size());
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        out.grover_ones[k] = static_cast<double>(schedule.n_shot) * p[k];
        if (q[k]) {
            out.ancillary_ones[k] = static_cast<double>(schedule.n_shot_prime) * *q[k];
        }
    }
    return out;
}

}  // namespace qaeortho
