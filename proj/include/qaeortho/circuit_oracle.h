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

#ifndef QAEORTHO_CIRCUIT_ORACLE_H
#define QAEORTHO_CIRCUIT_ORACLE_H

// Exact density-matrix simulation of the amplitude-estimation circuits on
// n index qubits plus one flag qubit (the last, least significant qubit).
// Used as an independent check of the closed-form hit probabilities.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qaeortho {

using ComplexMatrix = Eigen::MatrixXcd;

enum class CircuitOp { G, R, Uf };

/// Operators of one amplitude-estimation problem. Built once, then read-only.
struct CircuitModel {
    int n = 0;
    ComplexMatrix op_A;
    ComplexMatrix op_G;
    ComplexMatrix op_R;
    ComplexMatrix op_Uf;
    ComplexMatrix op_U0;
    double theta_encoded = 0.0;

    Eigen::Index dim() const { return op_A.rows(); }
};

struct DensityState {
    ComplexMatrix rho;
};

inline constexpr int kMaxOracleQubits = 6;

/// Circuit for an arbitrary unitary state preparation A of dimension 2^{n+1}:
/// G = -A U0 A^dag Uf, R = -A U0 A^dag.
CircuitModel build_circuit(int n, ComplexMatrix op_A);

/// A = T (P (x) I) encoding S = sum_j f(j) r(j) into the flag amplitude.
/// P prepares sum_j sqrt(r(j)) |j>, T rotates sqrt(f(j)) onto the flag.
CircuitModel build_sum_circuit(int n, std::span<const double> f_values, std::span<const double> r_values);

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// A copy of `circuit` whose R has an extra phase on its largest entry.
/// Negative control for the identity checks.
CircuitModel corrupt_ancillary_operator(const CircuitModel &circuit, double phase);

std::vector<CircuitOp> grover_sequence(int m);
/// G^{m-1} followed by R.
std::vector<CircuitOp> ancillary_sequence(int m);

DensityState initial_state(const CircuitModel &circuit);

/// Applies the sequence to A|0><0|A^dag. G and R are each followed by the
/// global depolarizing channel rho -> (1 - lambda) rho + lambda I / d;
/// Uf is applied without noise.
DensityState evolve(const CircuitModel &circuit, std::span<const CircuitOp> sequence, double lambda);

/// Tr(rho (I_n (x) |1><1|)), clipped to [0, 1].
double hit_probability(const DensityState &state);

/// Largest entry of |R G^{m-1} - Uf G^{m-2}|.
double verify_ancillary_identity(const CircuitModel &circuit, int m);

/// Largest entry of |U^dag U - I|.
double unitarity_defect(const ComplexMatrix &op);

}  // namespace qaeortho

#endif
