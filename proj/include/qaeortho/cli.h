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

#ifndef QAEORTHO_CLI_H
#define QAEORTHO_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qaeortho {

inline constexpr const char *kToolVersion = "0.1.0";

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // oracle residual violation, I/O failure
    kExitConfig = 2,   // malformed JSON, unknown keys, bad command line
    kExitDomain = 3,   // values outside the model domain, dimension mismatch
};

struct OracleCheckReport {
    double max_grover_residual = 0.0;
    double max_ancillary_residual = 0.0;
    double max_identity_residual = 0.0;
    double max_trace_defect = 0.0;

    double worst() const;
};

/// Compares simulated hit probabilities of G^m and R G^{m-1} with the closed
/// forms (beta = (1 - lambda)^m) for the sum circuit f(j) = sin^2(pi j / 10),
/// r(j) = 2^-n and for a Haar-random state preparation, m = 0..m_max, and
/// checks R G^{m-1} = Uf G^{m-2} for m = 2..m_max.
OracleCheckReport oracle_check(int n, double lambda, int m_max, std::uint64_t seed, bool corrupt_ancillary = false);

/// Entry point of the `qaeortho` executable; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double value);

}  // namespace qaeortho

#endif
