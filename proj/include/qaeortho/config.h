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

#ifndef QAEORTHO_CONFIG_H
#define QAEORTHO_CONFIG_H

// JSON run configuration shared by the CLI subcommands. Unknown keys are
// rejected; see README.md for the schema.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qaeortho/experiment.h"
#include "qaeortho/likelihood.h"

namespace qaeortho {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DataSource { sample, expected };

struct RunConfig {
    ExperimentConfig experiment;
    /// True when fit_c was given as "random-per-trial".
    bool random_fit_c = false;
    ScanGrid grid;
    DataSource data = DataSource::sample;
    std::string description;

    /// Fixed fitting coordinates, or trial 0's random ones.
    OrthoParams fit_c_for_trial(std::size_t trial) const;
};

/// Parses and validates. Throws ConfigError for syntax, type, missing or
/// unknown keys, and lets DomainError/DimensionError through for values
/// that are well-formed but outside the model's domain.
RunConfig parse_run_config(const nlohmann::json &doc);
RunConfig load_run_config(const std::string &path);

/// Canonical echo of the parsed configuration.
nlohmann::json to_json(const RunConfig &config);

/// {"grover_ones": [...], "ancillary_ones": [..., null, ...]}.
CountData parse_counts(const nlohmann::json &doc, const Schedule &schedule);
nlohmann::json to_json(const CountData &counts);

}  // namespace qaeortho

#endif
