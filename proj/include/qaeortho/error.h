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

#ifndef QAEORTHO_ERROR_H
#define QAEORTHO_ERROR_H

#include <stdexcept>

namespace qaeortho {

/// An argument lies outside the domain of the model (angle, noise amplitude, shot count, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sequences that must line up with a schedule have the wrong length.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A derivative or information quantity is singular at the requested point.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qaeortho

#endif
