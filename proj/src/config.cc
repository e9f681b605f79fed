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

#include "qaeortho/config.h"

#include <fstream>
#include <set>
#include <sstream>

namespace qaeortho {

using nlohmann::json;

namespace {

void check_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto &item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

const json &require(const json &obj, const std::string &key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError("missing key '" + key + "' in " + where);
    }
    return *it;
}

double as_number(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    return v.get<double>();
}

std::int64_t as_integer(const json &v, const std::string &what) {
    if (!v.is_number_integer()) {
        throw ConfigError(what + " must be an integer");
    }
    return v.get<std::int64_t>();
}

std::vector<double> as_number_list(const json &v, const std::string &what) {
    if (!v.is_array()) {
        throw ConfigError(what + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto &x : v) {
        out.push_back(as_number(x, what + " entry"));
    }
    return out;
}

Schedule parse_schedule(const json &obj) {
    check_keys(obj, {"m", "exponential", "n_shot", "n_shot_prime"}, "schedule");
    Schedule s;
    const bool has_m = obj.contains("m");
    const bool has_exp = obj.contains("exponential");
    if (has_m == has_exp) {
        throw ConfigError("schedule needs exactly one of 'm' or 'exponential'");
    }
    s.n_shot = as_integer(require(obj, "n_shot", "schedule"), "schedule.n_shot");
    s.n_shot_prime = obj.contains("n_shot_prime") ? as_integer(obj["n_shot_prime"], "schedule.n_shot_prime")
                                                  : s.n_shot;
    if (has_m) {
        const json &m = obj["m"];
        if (!m.is_array()) {
            throw ConfigError("schedule.m must be an array of integers");
        }
        for (const auto &x : m) {
            const std::int64_t v = as_integer(x, "schedule.m entry");
            if (v < 0 || v > (1 << 24)) {
                throw DomainError("schedule.m entries must lie in [0, 2^24]");
            }
            s.m.push_back(static_cast<int>(v));
        }
    } else {
        const std::int64_t len = as_integer(obj["exponential"], "schedule.exponential");
        if (len < 1 || len > 24) {
            throw DomainError("schedule.exponential must lie in [1, 24]");
        }
        s = Schedule::exponential(static_cast<std::size_t>(len), s.n_shot, s.n_shot_prime);
    }
    s.validate();
    return s;
}

TrueModelSpec parse_true_model(const json &obj, const Schedule &schedule) {
    if (!obj.is_object()) {
        throw ConfigError("true_model must be a JSON object");
    }
    const json &kind_v = require(obj, "kind", "true_model");
    if (!kind_v.is_string()) {
        throw ConfigError("true_model.kind must be a string");
    }
    const std::string kind = kind_v.get<std::string>();
    TrueModelSpec spec;
    if (kind == "depolarizing") {
        check_keys(obj, {"kind", "theta", "kappa", "readout_bias"}, "true_model");
        spec = TrueModelSpec::depolarizing_noise(
            as_number(require(obj, "theta", "true_model"), "true_model.theta"),
            as_number(require(obj, "kappa", "true_model"), "true_model.kappa"),
            obj.contains("readout_bias") ? as_number(obj["readout_bias"], "true_model.readout_bias") : 0.0);
    } else if (kind == "explicit_beta") {
        check_keys(obj, {"kind", "theta", "beta"}, "true_model");
        spec = TrueModelSpec::explicit_beta(
            as_number(require(obj, "theta", "true_model"), "true_model.theta"),
            NoiseVector(as_number_list(require(obj, "beta", "true_model"), "true_model.beta")));
    } else if (kind == "custom_curve") {
        check_keys(obj, {"kind", "theta", "beta", "readout_bias"}, "true_model");
        spec = TrueModelSpec::custom_curve(
            as_number(require(obj, "theta", "true_model"), "true_model.theta"),
            NoiseVector(as_number_list(require(obj, "beta", "true_model"), "true_model.beta")),
            obj.contains("readout_bias") ? as_number(obj["readout_bias"], "true_model.readout_bias") : 0.0);
    } else {
        throw ConfigError("true_model.kind must be depolarizing, explicit_beta or custom_curve");
    }
    spec.validate(schedule);
    return spec;
}

std::string kind_name(TrueModelSpec::Kind kind) {
    switch (kind) {
        case TrueModelSpec::Kind::explicit_beta:
            return "explicit_beta";
        case TrueModelSpec::Kind::depolarizing:
            return "depolarizing";
        case TrueModelSpec::Kind::custom_curve:
            return "custom_curve";
    }
    return "unknown";
}

}  // namespace

OrthoParams RunConfig::fit_c_for_trial(std::size_t trial) const {
    if (experiment.fit_c) {
        return *experiment.fit_c;
    }
    return random_ortho_params(trial_seed(experiment.master_seed, trial), experiment.schedule.size());
}

RunConfig parse_run_config(const json &doc) {
    check_keys(doc,
               {"description", "schedule", "true_model", "fit_c", "estimator", "grid", "data", "trials",
                "master_seed", "query_accounting", "threads"},
               "config");
    RunConfig cfg;
    ExperimentConfig &ex = cfg.experiment;
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) {
            throw ConfigError("description must be a string");
        }
        cfg.description = doc["description"].get<std::string>();
    }
    ex.schedule = parse_schedule(require(doc, "schedule", "config"));
    ex.true_model = parse_true_model(require(doc, "true_model", "config"), ex.schedule);

    const json &fit = require(doc, "fit_c", "config");
    if (fit.is_string()) {
        if (fit.get<std::string>() != "random-per-trial") {
            throw ConfigError("fit_c string must be \"random-per-trial\"");
        }
        cfg.random_fit_c = true;
    } else if (fit.is_number()) {
        ex.fit_c = OrthoParams::constant(ex.schedule.size(), fit.get<double>());
    } else {
        ex.fit_c = OrthoParams(as_number_list(fit, "fit_c"));
        if (ex.fit_c->size() != ex.schedule.size()) {
            throw DimensionError("fit_c length does not match the schedule");
        }
    }

    if (doc.contains("estimator")) {
        const json &e = doc["estimator"];
        check_keys(e, {"grid_points", "refine_tolerance"}, "estimator");
        if (e.contains("grid_points")) {
            const std::int64_t pts = as_integer(e["grid_points"], "estimator.grid_points");
            if (pts < 3) {
                throw DomainError("estimator.grid_points must be at least 3");
            }
            ex.estimator.grid_points = static_cast<std::size_t>(pts);
        }
        if (e.contains("refine_tolerance")) {
            ex.estimator.refine_tolerance = as_number(e["refine_tolerance"], "estimator.refine_tolerance");
        }
    }
    if (doc.contains("grid")) {
        const json &g = doc["grid"];
        check_keys(g, {"lo", "hi", "points"}, "grid");
        if (g.contains("lo")) {
            cfg.grid.lo = as_number(g["lo"], "grid.lo");
        }
        if (g.contains("hi")) {
            cfg.grid.hi = as_number(g["hi"], "grid.hi");
        }
        if (g.contains("points")) {
            const std::int64_t pts = as_integer(g["points"], "grid.points");
            if (pts < 2) {
                throw DomainError("grid.points must be at least 2");
            }
            cfg.grid.points = static_cast<std::size_t>(pts);
        }
        cfg.grid.validate();
    }
    if (doc.contains("data")) {
        const json &d = doc["data"];
        if (d == "sample") {
            cfg.data = DataSource::sample;
        } else if (d == "expected") {
            cfg.data = DataSource::expected;
        } else {
            throw ConfigError("data must be \"sample\" or \"expected\"");
        }
    }
    if (doc.contains("trials")) {
        const std::int64_t t = as_integer(doc["trials"], "trials");
        if (t < 1) {
            throw DomainError("trials must be at least 1");
        }
        ex.trials = static_cast<std::size_t>(t);
    }
    if (doc.contains("master_seed")) {
        const json &s = doc["master_seed"];
        if (!s.is_number_unsigned()) {
            throw ConfigError("master_seed must be a non-negative integer");
        }
        ex.master_seed = s.get<std::uint64_t>();
    }
    if (doc.contains("query_accounting")) {
        const json &q = doc["query_accounting"];
        if (q == "paper") {
            ex.accounting = QueryAccounting::paper;
        } else if (q == "strict") {
            ex.accounting = QueryAccounting::strict;
        } else {
            throw ConfigError("query_accounting must be \"paper\" or \"strict\"");
        }
    }
    if (doc.contains("threads")) {
        const std::int64_t t = as_integer(doc["threads"], "threads");
        if (t < 0) {
            throw DomainError("threads must be non-negative");
        }
        ex.threads = static_cast<unsigned>(t);
    }
    ex.validate();
    return cfg;
}

RunConfig load_run_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return parse_run_config(doc);
}

json to_json(const RunConfig &config) {
    const ExperimentConfig &ex = config.experiment;
    json out;
    if (!config.description.empty()) {
        out["description"] = config.description;
    }
    out["schedule"] = {{"m", ex.schedule.m}, {"n_shot", ex.schedule.n_shot}, {"n_shot_prime", ex.schedule.n_shot_prime}};
    const TrueModelSpec &tm = ex.true_model;
    json model = {{"kind", kind_name(tm.kind)}, {"theta", tm.theta_true}};
    if (tm.kind == TrueModelSpec::Kind::depolarizing) {
        model["kappa"] = tm.depolarizing.kappa;
    } else {
        model["beta"] = tm.beta.values();
    }
    if (tm.kind != TrueModelSpec::Kind::explicit_beta) {
        model["readout_bias"] = tm.readout_bias;
    }
    out["true_model"] = model;
    if (config.random_fit_c) {
        out["fit_c"] = "random-per-trial";
    } else {
        out["fit_c"] = ex.fit_c->values();
    }
    out["estimator"] = {{"grid_points", ex.estimator.grid_points}, {"refine_tolerance", ex.estimator.refine_tolerance}};
    out["grid"] = {{"lo", config.grid.lo}, {"hi", config.grid.hi}, {"points", config.grid.points}};
    out["data"] = config.data == DataSource::sample ? "sample" : "expected";
    out["trials"] = ex.trials;
    out["master_seed"] = ex.master_seed;
    out["query_accounting"] = ex.accounting == QueryAccounting::paper ? "paper" : "strict";
    return out;
}

CountData parse_counts(const json &doc, const Schedule &schedule) {
    check_keys(doc, {"grover_ones", "ancillary_ones"}, "counts");
    const json &g = require(doc, "grover_ones", "counts");
    const json &a = require(doc, "ancillary_ones", "counts");
    if (!g.is_array() || !a.is_array()) {
        throw ConfigError("counts entries must be arrays");
    }
    if (g.empty()) {
        throw DimensionError("counts are empty");
    }
    CountData counts;
    counts.schedule = schedule;
    for (const auto &x : g) {
        counts.grover_ones.push_back(as_integer(x, "grover_ones entry"));
    }
    for (const auto &x : a) {
        if (x.is_null()) {
            counts.ancillary_ones.emplace_back();
        } else {
            counts.ancillary_ones.emplace_back(as_integer(x, "ancillary_ones entry"));
        }
    }
    counts.validate();
    return counts;
}

json to_json(const CountData &counts) {
    json anc = json::array();
    for (const auto &x : counts.ancillary_ones) {
        anc.push_back(x ? json(*x) : json(nullptr));
    }
    return {{"grover_ones", counts.grover_ones}, {"ancillary_ones", anc}};
}

}  // namespace qaeortho
