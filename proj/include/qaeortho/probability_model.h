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

#ifndef QAEORTHO_PROBABILITY_MODEL_H
#define QAEORTHO_PROBABILITY_MODEL_H

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qaeortho/error.h"

namespace qaeortho {

template <typename Scalar = double>
inline constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;

/// Amplification schedule: Grover iteration counts and per-circuit shot budgets.
///
/// Entries with m_k = 0 are Grover-only (classical sampling); every entry with
/// m_k >= 1 is also measured on the ancillary circuit R G^{m_k - 1}.
struct Schedule {
    std::vector<int> m;
    std::int64_t n_shot = 1;
    std::int64_t n_shot_prime = 1;

    std::size_t size() const { return m.size(); }
    bool has_ancillary(std::size_t k) const { return m[k] >= 1; }
    int max_m() const;

    /// First `length` entries with the same shot counts.
    Schedule prefix(std::size_t length) const;

    /// Throws DomainError unless the invariants hold.
    void validate() const;

    /// m_k = 2^{k-1}, k = 1..length.
    static Schedule exponential(std::size_t length, std::int64_t n_shot, std::int64_t n_shot_prime);

    bool operator==(const Schedule &) const = default;
};

/// Per-entry oscillation amplitudes beta_k in [0, 1].
class NoiseVector {
   public:
    NoiseVector() = default;
    explicit NoiseVector(std::vector<double> beta);

    const std::vector<double> &values() const { return beta_; }
    std::size_t size() const { return beta_.size(); }
    double operator[](std::size_t k) const { return beta_[k]; }

   private:
    std::vector<double> beta_;
};

struct DepolarizingSpec {
    double kappa = 0.0;
};

namespace detail {

template <typename Scalar>
void check_angle(Scalar theta) {
    if (!(theta >= Scalar(0) && theta <= half_pi<Scalar>)) {
        throw DomainError("theta must lie in [0, pi/2]");
    }
}

template <typename Scalar>
void check_amplitude(Scalar beta) {
    if (!(beta >= Scalar(0) && beta <= Scalar(1))) {
        throw DomainError("beta must lie in [0, 1]");
    }
}

/// 1/2 - (beta/2) cos(2 * multiplier * theta) with no range checks. The
/// orthogonalized coordinates can produce beta > 1 while keeping the result
/// a probability, so likelihood code goes through this kernel.
template <typename Scalar>
Scalar oscillation(Scalar theta, Scalar beta, int multiplier) {
    using std::cos;
    return Scalar(0.5) - Scalar(0.5) * beta * cos(Scalar(2 * multiplier) * theta);
}

inline int grover_multiplier(int m) { return 2 * m + 1; }
inline int ancillary_multiplier(int m) { return 2 * m - 3; }

}  // namespace detail

/// Probability of reading "1" after G^m under the generalized decay model.
template <typename Scalar>
Scalar grover_prob(Scalar theta, Scalar beta, int m) {
    detail::check_angle(theta);
    detail::check_amplitude(beta);
    if (m < 0) {
        throw DomainError("grover_prob: m must be non-negative");
    }
    return detail::oscillation(theta, beta, detail::grover_multiplier(m));
}

/// Probability of reading "1" after R G^{m-1}; the phase is delayed by two
/// Grover steps relative to grover_prob. For m = 1 the multiplier is -1.
template <typename Scalar>
Scalar ancillary_prob(Scalar theta, Scalar beta, int m) {
    detail::check_angle(theta);
    detail::check_amplitude(beta);
    if (m < 1) {
        throw DomainError("ancillary_prob: the ancillary circuit needs m >= 1");
    }
    return detail::oscillation(theta, beta, detail::ancillary_multiplier(m));
}

/// exp(-kappa m).
template <typename Scalar>
Scalar depolarizing_beta(Scalar kappa, int m) {
    using std::exp;
    if (!(kappa >= Scalar(0))) {
        throw DomainError("kappa must be non-negative");
    }
    if (m < 0) {
        throw DomainError("depolarizing_beta: m must be non-negative");
    }
    return exp(-kappa * Scalar(m));
}

inline double depolarizing_beta(const DepolarizingSpec &spec, int m) { return depolarizing_beta<double>(spec.kappa, m); }

/// beta_k = exp(-kappa m_k) for every schedule entry.
NoiseVector depolarizing_noise(const DepolarizingSpec &spec, const Schedule &schedule);

}  // namespace qaeortho

#endif
