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

#include "qaeortho/fisher.h"

namespace qaeortho {

double classical_crlb(std::int64_t n_queries) {
    if (n_queries < 1) {
        throw DomainError("classical_crlb: n_queries must be positive");
    }
    return 1.0 / (4.0 * static_cast<double>(n_queries));
}

double noiseless_crlb(const Schedule &schedule, std::int64_t shots_per_k) {
    if (schedule.m.empty()) {
        throw DomainError("noiseless_crlb: empty schedule");
    }
    if (shots_per_k < 1) {
        throw DomainError("noiseless_crlb: shots_per_k must be positive");
    }
    double total = 0.0;
    for (int mk : schedule.m) {
        const double k = 2.0 * mk + 1.0;
        total += k * k;
    }
    return 1.0 / (4.0 * static_cast<double>(shots_per_k) * total);
}

std::int64_t query_count(const Schedule &schedule, QueryAccounting mode) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const std::int64_t mk = schedule.m[k];
        total += schedule.n_shot * (2 * mk + 1);
        if (mode == QueryAccounting::strict && schedule.has_ancillary(k)) {
            total += schedule.n_shot_prime * (2 * mk - 1);
        }
    }
    return total;
}

}  // namespace qaeortho
