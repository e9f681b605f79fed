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

#include "qaeortho/circuit_oracle.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "qaeortho/error.h"

namespace qaeortho {

namespace {

using Complex = std::complex<double>;

Eigen::Index register_dim(int n) { return Eigen::Index(1) << (n + 1); }

void check_qubits(int n) {
    if (n < 1 || n > kMaxOracleQubits) {
        throw DomainError("oracle supports 1 <= n <= 6 index qubits");
    }
}

ComplexMatrix matrix_power(const ComplexMatrix &op, int power) {
    ComplexMatrix out = ComplexMatrix::Identity(op.rows(), op.cols());
    for (int i = 0; i < power; ++i) {
        out = op * out;
    }
    return out;
}

}  // namespace

double unitarity_defect(const ComplexMatrix &op) {
    const ComplexMatrix d = op.adjoint() * op - ComplexMatrix::Identity(op.rows(), op.cols());
    return d.cwiseAbs().maxCoeff();
}

CircuitModel build_circuit(int n, ComplexMatrix op_A) {
    check_qubits(n);
    const Eigen::Index dim = register_dim(n);
    if (op_A.rows() != dim || op_A.cols() != dim) {
        throw DimensionError("state preparation must have dimension 2^(n+1)");
    }
    if (unitarity_defect(op_A) > 1e-10) {
        throw DomainError("state preparation is not unitary");
    }

    CircuitModel c;
    c.n = n;
    c.op_A = std::move(op_A);
    c.op_U0 = ComplexMatrix::Identity(dim, dim);
    c.op_U0(0, 0) = -1.0;
    c.op_Uf = ComplexMatrix::Identity(dim, dim);
    for (Eigen::Index i = 1; i < dim; i += 2) {
        c.op_Uf(i, i) = -1.0;
    }
    c.op_R = -(c.op_A * c.op_U0 * c.op_A.adjoint());
    c.op_G = c.op_R * c.op_Uf;

    double good = 0.0;
    for (Eigen::Index i = 1; i < dim; i += 2) {
        good += std::norm(c.op_A(i, 0));
    }
    c.theta_encoded = std::asin(std::sqrt(std::clamp(good, 0.0, 1.0)));
    return c;
}

CircuitModel build_sum_circuit(int n, std::span<const double> f_values, std::span<const double> r_values) {
    check_qubits(n);
    const auto states = static_cast<std::size_t>(1) << n;
    if (f_values.size() != states || r_values.size() != states) {
        throw DimensionError("f and r must have 2^n entries");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < states; ++j) {
        if (!(f_values[j] >= 0.0 && f_values[j] <= 1.0)) {
            throw DomainError("f values must lie in [0, 1]");
        }
        if (!(r_values[j] >= 0.0)) {
            throw DomainError("r must be a probability vector");
        }
        total += r_values[j];
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("r must sum to one");
    }

    const auto N = static_cast<Eigen::Index>(states);
    // P: Householder reflection taking |0> to sum_j sqrt(r(j)) |j>.
    Eigen::VectorXd v(N);
    for (Eigen::Index j = 0; j < N; ++j) {
        v(j) = std::sqrt(r_values[static_cast<std::size_t>(j)]);
    }
    Eigen::VectorXd u = -v;
    u(0) += 1.0;
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(N, N);
    const double uu = u.squaredNorm();
    if (uu > 1e-30) {
        P -= 2.0 * u * u.transpose() / uu;
    }

    const Eigen::Index dim = 2 * N;
    ComplexMatrix P_ext = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix T = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < N; ++j) {
        for (Eigen::Index jp = 0; jp < N; ++jp) {
            P_ext(2 * j, 2 * jp) = P(j, jp);
            P_ext(2 * j + 1, 2 * jp + 1) = P(j, jp);
        }
        const double f = f_values[static_cast<std::size_t>(j)];
        const double s = std::sqrt(f);
        const double co = std::sqrt(1.0 - f);
        T(2 * j, 2 * j) = co;
        T(2 * j, 2 * j + 1) = -s;
        T(2 * j + 1, 2 * j) = s;
        T(2 * j + 1, 2 * j + 1) = co;
    }
    return build_circuit(n, T * P_ext);
}

ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            z(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

CircuitModel corrupt_ancillary_operator(const CircuitModel &circuit, double phase) {
    CircuitModel out = circuit;
    // The largest entry, so the perturbation cannot vanish on a zero element.
    Eigen::Index i = 0, j = 0;
    out.op_R.cwiseAbs().maxCoeff(&i, &j);
    out.op_R(i, j) *= std::polar(1.0, phase);
    return out;
}

std::vector<CircuitOp> grover_sequence(int m) {
    if (m < 0) {
        throw DomainError("grover_sequence: m must be non-negative");
    }
    return std::vector<CircuitOp>(static_cast<std::size_t>(m), CircuitOp::G);
}

std::vector<CircuitOp> ancillary_sequence(int m) {
    if (m < 1) {
        throw DomainError("ancillary_sequence: m must be >= 1");
    }
    std::vector<CircuitOp> seq(static_cast<std::size_t>(m - 1), CircuitOp::G);
    seq.push_back(CircuitOp::R);
    return seq;
}

DensityState initial_state(const CircuitModel &circuit) {
    const Eigen::VectorXcd psi = circuit.op_A.col(0);
    return {psi * psi.adjoint()};
}

DensityState evolve(const CircuitModel &circuit, std::span<const CircuitOp> sequence, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("depolarizing probability must lie in [0, 1]");
    }
    DensityState state = initial_state(circuit);
    const Eigen::Index dim = circuit.dim();
    const ComplexMatrix mixed = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    for (CircuitOp op : sequence) {
        const ComplexMatrix *u = nullptr;
        switch (op) {
            case CircuitOp::G:
                u = &circuit.op_G;
                break;
            case CircuitOp::R:
                u = &circuit.op_R;
                break;
            case CircuitOp::Uf:
                u = &circuit.op_Uf;
                break;
        }
        state.rho = (*u) * state.rho * u->adjoint();
        if (op != CircuitOp::Uf) {
            state.rho = (1.0 - lambda) * state.rho + lambda * mixed;
        }
    }
    return state;
}

double hit_probability(const DensityState &state) {
    double p = 0.0;
    for (Eigen::Index i = 1; i < state.rho.rows(); i += 2) {
        p += state.rho(i, i).real();
    }
    if (p < 0.0 && p > -1e-14) {
        p = 0.0;
    }
    if (p > 1.0 && p < 1.0 + 1e-14) {
        p = 1.0;
    }
    return std::clamp(p, 0.0, 1.0);
}

double verify_ancillary_identity(const CircuitModel &circuit, int m) {
    if (m < 2) {
        throw DomainError("verify_ancillary_identity: m must be >= 2");
    }
    const ComplexMatrix g_prev = matrix_power(circuit.op_G, m - 2);
    const ComplexMatrix lhs = circuit.op_R * (circuit.op_G * g_prev);
    const ComplexMatrix rhs = circuit.op_Uf * g_prev;
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace qaeortho
