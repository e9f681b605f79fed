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

#ifndef QAEORTHO_FISHER_H
#define QAEORTHO_FISHER_H

// Fisher information for (theta, beta_1, ..., beta_M) and for the
// orthogonalized coordinates (theta, c_1, ..., c_M).
//
// Each circuit is a Bernoulli trial with probability 1/2 - (beta/2) cos(phi),
// so a shot contributes (d_a p)(d_b p) / (p (1 - p)). Because beta_j and
// beta_k never appear in the same circuit, J has the arrow shape: nonzeros
// only in the first row, first column and diagonal.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qaeortho/error.h"
#include "qaeortho/orthogonalization.h"
#include "qaeortho/probability_model.h"

namespace qaeortho {

enum class MatrixStructure { arrow, dense };

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct BasicFisherMatrix {
    MatrixX<Scalar> entries;
    MatrixStructure structure = MatrixStructure::dense;

    Eigen::Index dim() const { return entries.rows(); }
};

using FisherMatrix = BasicFisherMatrix<double>;

namespace detail {

/// One circuit's contribution. `multiplier` is 2m+1 or 2m-3.
template <typename Scalar>
void add_circuit_information(MatrixX<Scalar> &J, Eigen::Index slot, Scalar theta, Scalar beta, int multiplier,
                             std::int64_t shots) {
    using std::cos;
    using std::sin;
    const Scalar phi = Scalar(2 * multiplier) * theta;
    const Scalar s = sin(phi);
    const Scalar co = cos(phi);
    const Scalar denom = Scalar(1) - beta * beta * co * co;
    if (!(denom > Scalar(0))) {
        throw SingularityError("Fisher information diverges: a circuit probability is 0 or 1");
    }
    const Scalar n = Scalar(shots);
    const Scalar k = Scalar(multiplier);
    J(0, 0) += Scalar(4) * n * beta * beta * k * k * s * s / denom;
    const Scalar cross = -Scalar(2) * n * beta * k * s * co / denom;
    J(0, slot) += cross;
    J(slot, 0) += cross;
    J(slot, slot) += n * co * co / denom;
}

}  // namespace detail

/// J at (theta, beta) with ordering (theta, beta_1, ..., beta_M). Amplitudes
/// above 1 are accepted as long as no circuit probability reaches 0 or 1.
template <typename Scalar>
BasicFisherMatrix<Scalar> fisher_matrix(Scalar theta, std::span<const Scalar> beta, const Schedule &schedule) {
    schedule.validate();
    detail::check_angle(theta);
    if (beta.size() != schedule.size()) {
        throw DimensionError("beta length does not match the schedule");
    }
    const auto dim = static_cast<Eigen::Index>(schedule.size() + 1);
    BasicFisherMatrix<Scalar> out{MatrixX<Scalar>::Zero(dim, dim), MatrixStructure::arrow};
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const auto slot = static_cast<Eigen::Index>(k + 1);
        const int m = schedule.m[k];
        detail::add_circuit_information(out.entries, slot, theta, beta[k], detail::grover_multiplier(m),
                                        schedule.n_shot);
        if (schedule.has_ancillary(k)) {
            detail::add_circuit_information(out.entries, slot, theta, beta[k], detail::ancillary_multiplier(m),
                                            schedule.n_shot_prime);
        }
    }
    return out;
}

inline FisherMatrix fisher_matrix(double theta, const NoiseVector &beta, const Schedule &schedule) {
    return fisher_matrix<double>(theta, std::span<const double>(beta.values()), schedule);
}

/// Jacobian of (theta, beta_1..beta_M) with respect to (theta, c_1..c_M).
/// Slots with c_k = 1 or A_p = A_q = 0 carry the constant solution beta = 0,
/// so their partials are zero.
template <typename Scalar>
MatrixX<Scalar> ortho_jacobian(Scalar theta, std::span<const Scalar> c, const Schedule &schedule) {
    const auto dim = static_cast<Eigen::Index>(schedule.size() + 1);
    MatrixX<Scalar> T = MatrixX<Scalar>::Zero(dim, dim);
    T(0, 0) = Scalar(1);
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const auto slot = static_cast<Eigen::Index>(k + 1);
        const auto b = beta_from_c(theta, c[k], schedule.m[k]);
        if (b.degenerate || b.value == Scalar(0)) {
            continue;
        }
        const auto d = beta_partials(theta, c[k], schedule.m[k]);
        T(slot, 0) = d.dbeta_dtheta;
        T(slot, slot) = d.dbeta_dc;
    }
    return T;
}

/// J_xi = T^T J T. The theta row is orthogonal to every c_k when the Grover
/// and ancillary shot counts are equal (and on Grover-only slots).
template <typename Scalar>
BasicFisherMatrix<Scalar> fisher_orthogonalized(Scalar theta, std::span<const Scalar> c, const Schedule &schedule) {
    schedule.validate();
    detail::check_angle(theta);
    if (c.size() != schedule.size()) {
        throw DimensionError("c length does not match the schedule");
    }
    std::vector<Scalar> beta(schedule.size());
    for (std::size_t k = 0; k < beta.size(); ++k) {
        beta[k] = beta_from_c(theta, c[k], schedule.m[k]).value;
    }
    const auto J = fisher_matrix<Scalar>(theta, std::span<const Scalar>(beta), schedule);
    const MatrixX<Scalar> T = ortho_jacobian<Scalar>(theta, c, schedule);
    MatrixX<Scalar> J_xi = T.transpose() * J.entries * T;
    return {(J_xi + J_xi.transpose()) / Scalar(2), MatrixStructure::arrow};
}

inline FisherMatrix fisher_orthogonalized(double theta, const OrthoParams &c, const Schedule &schedule) {
    return fisher_orthogonalized<double>(theta, std::span<const double>(c.values()), schedule);
}

/// (J^{-1})_{11} by the arrow-shaped Schur complement
///     1 / (J_11 - sum_k J_1k^2 / J_kk).
/// Nuisance slots with J_kk = J_1k = 0 carry no information and are skipped.
template <typename Scalar>
Scalar crlb_theta_schur(const BasicFisherMatrix<Scalar> &J) {
    using std::abs;
    const auto &E = J.entries;
    Scalar schur = E(0, 0);
    Scalar scale = abs(E(0, 0));
    for (Eigen::Index k = 1; k < J.dim(); ++k) {
        if (E(k, k) == Scalar(0)) {
            if (E(0, k) != Scalar(0)) {
                throw SingularityError("theta is not identifiable: nuisance slot without curvature");
            }
            continue;
        }
        const Scalar r = E(0, k) * E(0, k) / E(k, k);
        schur -= r;
        scale += r;
    }
    if (!(schur > Scalar(64) * Eigen::NumTraits<Scalar>::epsilon() * scale)) {
        throw SingularityError("theta is not identifiable: Schur complement is not positive");
    }
    return Scalar(1) / schur;
}

/// (J^{-1})_{11} by full LU inversion.
template <typename Scalar>
Scalar crlb_theta_dense(const BasicFisherMatrix<Scalar> &J) {
    Eigen::FullPivLU<MatrixX<Scalar>> lu(J.entries);
    if (!lu.isInvertible()) {
        throw SingularityError("Fisher matrix is singular");
    }
    MatrixX<Scalar> e1 = MatrixX<Scalar>::Zero(J.dim(), 1);
    e1(0, 0) = Scalar(1);
    const Scalar v = lu.solve(e1)(0, 0);
    if (!(v > Scalar(0))) {
        throw SingularityError("theta is not identifiable");
    }
    return v;
}

/// Arrow matrices go through the O(M) Schur form, anything else through LU.
template <typename Scalar>
Scalar crlb_theta(const BasicFisherMatrix<Scalar> &J) {
    return J.structure == MatrixStructure::arrow ? crlb_theta_schur(J) : crlb_theta_dense(J);
}

/// Classical sampling (m = 0, beta = 1) has per-shot information 4 at every theta.
double classical_crlb(std::int64_t n_queries);

/// Noiseless Grover-only bound 1 / (4 shots sum_k (2 m_k + 1)^2).
double noiseless_crlb(const Schedule &schedule, std::int64_t shots_per_k);

enum class QueryAccounting {
    /// sum_k n_shot (2 m_k + 1)
    paper,
    /// paper + sum_{m_k >= 1} n_shot' (2 m_k - 1)
    strict,
};

std::int64_t query_count(const Schedule &schedule, QueryAccounting mode = QueryAccounting::paper);

}  // namespace qaeortho

#endif
