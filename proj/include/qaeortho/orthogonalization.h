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

#ifndef QAEORTHO_ORTHOGONALIZATION_H
#define QAEORTHO_ORTHOGONALIZATION_H

// Closed-form orthogonalized nuisance coordinates.
//
// For a schedule entry k measured on both G^{m_k} and R G^{m_k - 1} with equal
// shot counts, the nuisance amplitude beta_k becomes orthogonal to theta when
//
//     (1 - A_p(theta) beta_k^2) (1 - A_q(theta) beta_k^2) = c_k,
//
// with A_p = cos^2(2(2m+1)theta) and A_q = cos^2(2(2m-3)theta). We take
// c_k itself as the k-th nuisance coordinate. Grover-only entries (m_k = 0)
// use the single-factor relation 1 - A_p beta_k^2 = c_k, which is the same
// formula with A_q = 0.

#include <cmath>
#include <limits>
#include <vector>

#include "qaeortho/error.h"
#include "qaeortho/probability_model.h"

namespace qaeortho {

/// Free coordinates c_k in [0, 1], one per schedule entry.
class OrthoParams {
   public:
    OrthoParams() = default;
    explicit OrthoParams(std::vector<double> c);
    static OrthoParams constant(std::size_t size, double value);

    const std::vector<double> &values() const { return c_; }
    std::size_t size() const { return c_.size(); }
    double operator[](std::size_t k) const { return c_[k]; }
    OrthoParams prefix(std::size_t length) const;

   private:
    std::vector<double> c_;
};

template <typename Scalar>
struct OscillationFactors {
    Scalar a_p;
    Scalar a_q;
};

template <typename Scalar>
struct OrthoBeta {
    Scalar value;
    /// A_p = A_q = 0: the slot probabilities are 1/2 for every beta.
    bool degenerate;
};

template <typename Scalar>
struct BetaPartials {
    Scalar dbeta_dtheta;
    Scalar dbeta_dc;
};

namespace detail {

/// Factors and their theta-derivatives for one slot; a_q = da_q = 0 on
/// Grover-only slots.
template <typename Scalar>
struct SlotFactors {
    Scalar a_p, a_q, da_p, da_q;
};

template <typename Scalar>
SlotFactors<Scalar> slot_factors(Scalar theta, int m) {
    using std::cos;
    using std::sin;
    const int kp = grover_multiplier(m);
    const Scalar cp = cos(Scalar(2 * kp) * theta);
    SlotFactors<Scalar> f{cp * cp, Scalar(0), -Scalar(2 * kp) * sin(Scalar(4 * kp) * theta), Scalar(0)};
    if (m >= 1) {
        const int kq = ancillary_multiplier(m);
        const Scalar cq = cos(Scalar(2 * kq) * theta);
        f.a_q = cq * cq;
        f.da_q = -Scalar(2 * kq) * sin(Scalar(4 * kq) * theta);
    }
    return f;
}

/// Minus-branch root of the quartic, rationalized:
///   beta^2 = 2(1-c) / (s + sqrt((A_p - A_q)^2 + 4 A_p A_q c)),  s = A_p + A_q.
/// The discriminant is written as a sum of non-negative terms so it never
/// rounds below zero.
template <typename Scalar>
OrthoBeta<Scalar> beta_from_factors(Scalar a_p, Scalar a_q, Scalar c) {
    using std::sqrt;
    const Scalar s = a_p + a_q;
    // Both factors within rounding of zero: cos(2 k theta) vanishes up to the
    // representation error of theta, and beta would be of order 1/eps.
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar tiny = Scalar(256) * eps * eps;
    if (s <= tiny) {
        return {Scalar(0), true};
    }
    const Scalar diff = a_p - a_q;
    const Scalar root = sqrt(diff * diff + Scalar(4) * a_p * a_q * c);
    return {sqrt(Scalar(2) * (Scalar(1) - c) / (s + root)), false};
}

template <typename Scalar>
void check_c(Scalar c) {
    if (!(c >= Scalar(0) && c <= Scalar(1))) {
        throw DomainError("c must lie in [0, 1]");
    }
}

}  // namespace detail

template <typename Scalar>
OscillationFactors<Scalar> oscillation_factors(Scalar theta, int m) {
    if (m < 1) {
        throw DomainError("oscillation_factors: m must be >= 1");
    }
    const auto f = detail::slot_factors(theta, m);
    return {f.a_p, f.a_q};
}

/// Orthogonalized beta for one slot; m = 0 selects the Grover-only relation.
template <typename Scalar>
OrthoBeta<Scalar> beta_from_c(Scalar theta, Scalar c, int m) {
    detail::check_angle(theta);
    detail::check_c(c);
    if (m < 0) {
        throw DomainError("beta_from_c: m must be non-negative");
    }
    const auto f = detail::slot_factors(theta, m);
    return detail::beta_from_factors(f.a_p, f.a_q, c);
}

/// (1 - A_p beta^2)(1 - A_q beta^2); throws DomainError off the minus branch.
template <typename Scalar>
Scalar c_from_beta(Scalar theta, Scalar beta, int m) {
    detail::check_angle(theta);
    if (!(beta >= Scalar(0))) {
        throw DomainError("c_from_beta: beta must be non-negative");
    }
    if (m < 0) {
        throw DomainError("c_from_beta: m must be non-negative");
    }
    const auto f = detail::slot_factors(theta, m);
    const Scalar b2 = beta * beta;
    const Scalar fp = Scalar(1) - f.a_p * b2;
    const Scalar fq = Scalar(1) - f.a_q * b2;
    if (fp < Scalar(0) || fq < Scalar(0)) {
        throw DomainError("c_from_beta: beta is outside the admissible branch");
    }
    return fp * fq;
}

/// Implicit derivatives of beta(theta, c) from F = (1 - A_p b^2)(1 - A_q b^2) - c.
///
/// Throws SingularityError where dF/dbeta vanishes: at beta = 0 (c = 1, where
/// callers should use the constant solution beta = 0), at the degenerate
/// point A_p = A_q = 0, and on the c = 0 boundary when both factors vanish.
template <typename Scalar>
BetaPartials<Scalar> beta_partials(Scalar theta, Scalar c, int m) {
    detail::check_angle(theta);
    detail::check_c(c);
    if (m < 0) {
        throw DomainError("beta_partials: m must be non-negative");
    }
    const auto f = detail::slot_factors(theta, m);
    const auto b = detail::beta_from_factors(f.a_p, f.a_q, c);
    if (b.degenerate) {
        throw SingularityError("beta_partials: degenerate slot (A_p = A_q = 0)");
    }
    const Scalar beta = b.value;
    const Scalar b2 = beta * beta;
    const Scalar fp = Scalar(1) - f.a_p * b2;
    const Scalar fq = Scalar(1) - f.a_q * b2;
    const Scalar dF_dbeta = -Scalar(2) * beta * (f.a_p * fq + f.a_q * fp);
    if (dF_dbeta == Scalar(0)) {
        throw SingularityError("beta_partials: dF/dbeta vanishes");
    }
    const Scalar dF_dtheta = -b2 * (f.da_p * fq + f.da_q * fp);
    return {-dF_dtheta / dF_dbeta, Scalar(1) / dF_dbeta};
}

/// beta_k = beta_from_c(theta, c_k, m_k) for each slot. Degenerate slots yield 0.
std::vector<double> ortho_betas(double theta, const OrthoParams &c, const Schedule &schedule);

}  // namespace qaeortho

#endif
