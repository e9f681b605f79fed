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

#include "qaeortho/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qaeortho/config.h"

namespace qaeortho {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kConfigDir = QAEORTHO_CONFIG_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir {
   public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("qaeortho_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string &name) const { return path_ / name; }
    const fs::path &path() const { return path_; }

   private:
    fs::path path_;
};

void write(const fs::path &p, const std::string &text) { std::ofstream(p, std::ios::binary) << text; }

json base_config() {
    return json::parse(R"({
      "schedule": {"m": [1, 2, 4], "n_shot": 30, "n_shot_prime": 30},
      "true_model": {"kind": "depolarizing", "theta": 0.35, "kappa": 0.01},
      "fit_c": 0.3,
      "grid": {"points": 50},
      "estimator": {"grid_points": 1000},
      "master_seed": 5
    })");
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.5e-7), "-2.5e-07");
    EXPECT_EQ(format_double(1.0 / 0.0), "inf");
    EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Config, ParsesBundledConfigs) {
    for (const auto &entry : fs::directory_iterator(kConfigDir)) {
        EXPECT_NO_THROW(load_run_config(entry.path().string())) << entry.path();
    }
}

TEST(Config, RoundTripEcho) {
    const RunConfig a = parse_run_config(base_config());
    const RunConfig b = parse_run_config(to_json(a));
    EXPECT_EQ(to_json(a), to_json(b));
    EXPECT_EQ(b.experiment.schedule, (Schedule{{1, 2, 4}, 30, 30}));
    EXPECT_EQ(b.grid.points, 50u);
}

TEST(Config, Errors) {
    auto cfg = base_config();
    cfg["surprise"] = 1;
    EXPECT_THROW(parse_run_config(cfg), ConfigError);
    cfg = base_config();
    cfg.erase("schedule");
    EXPECT_THROW(parse_run_config(cfg), ConfigError);
    cfg = base_config();
    cfg["trials"] = "many";
    EXPECT_THROW(parse_run_config(cfg), ConfigError);
    cfg = base_config();
    cfg["fit_c"] = {0.1, 0.2};
    EXPECT_THROW(parse_run_config(cfg), DimensionError);
    cfg = base_config();
    cfg["true_model"]["theta"] = 2.0;
    EXPECT_THROW(parse_run_config(cfg), DomainError);
    cfg = base_config();
    cfg["fit_c"] = "random-per-trial";
    const RunConfig r = parse_run_config(cfg);
    EXPECT_TRUE(r.random_fit_c);
    EXPECT_EQ(r.fit_c_for_trial(0).size(), 3u);
}

TEST(Config, Counts) {
    const Schedule s{{0, 2}, 10, 10};
    const auto counts = parse_counts(json::parse(R"({"grover_ones": [3, 4], "ancillary_ones": [null, 6]})"), s);
    EXPECT_EQ(counts.grover_ones, (std::vector<std::int64_t>{3, 4}));
    EXPECT_FALSE(counts.ancillary_ones[0]);
    EXPECT_EQ(*counts.ancillary_ones[1], 6);
    EXPECT_EQ(parse_counts(to_json(counts), s), counts);
    EXPECT_THROW(parse_counts(json::parse(R"({"grover_ones": [3], "ancillary_ones": [null]})"), s), DimensionError);
    EXPECT_THROW(parse_counts(json::parse(R"({"grover_ones": [3, 40], "ancillary_ones": [null, 6]})"), s), DomainError);
}

TEST(Cli, ScanRowCount) {
    TempDir dir;
    const auto out = dir / "scan.csv";
    const CliRun r = cli({"scan", kConfigDir + "/case1_scan.json", "--output", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string text = read_file(out);
    EXPECT_EQ(text.rfind("theta,loglik\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10001);
    EXPECT_EQ(text.back(), '\n');
}

TEST(Cli, ScanFlatForUnitC) {
    const CliRun r = cli({"scan", kConfigDir + "/flat_scan.json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    std::string line, value;
    std::getline(in, line);
    std::set<std::string> values;
    while (std::getline(in, line)) {
        values.insert(line.substr(line.find(',') + 1));
    }
    EXPECT_EQ(values.size(), 1u);
}

TEST(Cli, MalformedConfigExitsTwo) {
    TempDir dir;
    write(dir / "bad.json", "{\"schedule\": ");
    EXPECT_EQ(cli({"scan", (dir / "bad.json").string()}).code, kExitConfig);
    auto cfg = base_config();
    cfg["unknown_key"] = true;
    write(dir / "extra.json", cfg.dump());
    EXPECT_EQ(cli({"scan", (dir / "extra.json").string()}).code, kExitConfig);
    EXPECT_EQ(cli({"scan", (dir / "missing.json").string()}).code, kExitConfig);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitConfig);
    EXPECT_EQ(cli({}).code, kExitConfig);
}

TEST(Cli, DomainErrorExitsThree) {
    TempDir dir;
    auto cfg = base_config();
    cfg["true_model"]["kappa"] = -1.0;
    write(dir / "neg.json", cfg.dump());
    const CliRun r = cli({"scan", (dir / "neg.json").string()});
    EXPECT_EQ(r.code, kExitDomain);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EstimateSimulateIsDeterministic) {
    TempDir dir;
    const auto a = dir / "a.json", b = dir / "b.json";
    ASSERT_EQ(cli({"estimate", kConfigDir + "/estimate.json", "--simulate", "--output", a.string()}).code, kExitOk);
    ASSERT_EQ(cli({"estimate", kConfigDir + "/estimate.json", "--simulate", "--output", b.string()}).code, kExitOk);
    EXPECT_EQ(read_file(a), read_file(b));
    const json doc = json::parse(read_file(a));
    for (const char *key : {"theta_hat", "loglik", "degenerate", "seed", "config"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    ASSERT_EQ(cli({"--seed", "99", "estimate", kConfigDir + "/estimate.json", "--simulate", "--output", b.string()})
                  .code,
              kExitOk);
    EXPECT_NE(read_file(a), read_file(b));
}

TEST(Cli, EstimateFromExpectedCounts) {
    TempDir dir;
    const RunConfig cfg = load_run_config(kConfigDir + "/estimate.json");
    const auto exp = expected_counts(cfg.experiment.true_model, cfg.experiment.schedule);
    json counts;
    counts["grover_ones"] = exp.grover_ones;
    counts["ancillary_ones"] = json::array();
    // Round to integers the way a measured record would be.
    for (auto &g : counts["grover_ones"]) {
        g = static_cast<std::int64_t>(std::llround(g.get<double>()));
    }
    for (const auto &a : exp.ancillary_ones) {
        counts["ancillary_ones"].push_back(static_cast<std::int64_t>(std::llround(*a)));
    }
    write(dir / "counts.json", counts.dump());
    const CliRun r = cli({"estimate", kConfigDir + "/estimate.json", "--counts", (dir / "counts.json").string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_LT(std::abs(json::parse(r.out)["theta_hat"].get<double>() - 0.35), 1e-3);
}

TEST(Cli, EstimateCountErrors) {
    TempDir dir;
    write(dir / "empty.json", "");
    EXPECT_EQ(cli({"estimate", kConfigDir + "/estimate.json", "--counts", (dir / "empty.json").string()}).code,
              kExitDomain);
    write(dir / "short.json", R"({"grover_ones": [1, 2], "ancillary_ones": [1, 2]})");
    EXPECT_EQ(cli({"estimate", kConfigDir + "/estimate.json", "--counts", (dir / "short.json").string()}).code,
              kExitDomain);
    EXPECT_EQ(cli({"estimate", kConfigDir + "/estimate.json", "--counts", (dir / "short.json").string(),
                   "--simulate"})
                  .code,
              kExitConfig);
}

TEST(Cli, CampaignSmoke) {
    TempDir dir;
    const CliRun r = cli({"campaign", kConfigDir + "/smoke.json", "--output", (dir / "out").string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string csv = read_file(dir / "out" / "error_curve.csv");
    EXPECT_EQ(csv.rfind("prefix,n_queries,rmse,crlb_model,crlb_classical,crlb_noiseless,n_trials,n_degenerate\n", 0),
              0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4);
    const json manifest = json::parse(read_file(dir / "out" / "manifest.json"));
    EXPECT_EQ(manifest["version"], kToolVersion);
    EXPECT_EQ(manifest["master_seed"], 1);
    EXPECT_TRUE(manifest.contains("started_at"));
    EXPECT_EQ(parse_run_config(manifest["config"])
                  .experiment.schedule,
              load_run_config(kConfigDir + "/smoke.json").experiment.schedule);

    // Data files are byte-identical on rerun.
    ASSERT_EQ(cli({"campaign", kConfigDir + "/smoke.json", "--output", (dir / "again").string()}).code, kExitOk);
    EXPECT_EQ(csv, read_file(dir / "again" / "error_curve.csv"));
    EXPECT_EQ(read_file(dir / "out" / "trials.csv"), read_file(dir / "again" / "trials.csv"));
}

TEST(Cli, CampaignNeedsOutput) { EXPECT_EQ(cli({"campaign", kConfigDir + "/smoke.json"}).code, kExitConfig); }

TEST(Cli, OracleCheck) {
    const CliRun ok = cli({"oracle-check"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out;
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    EXPECT_EQ(cli({"oracle-check", "--n", "2", "--lambda", "0", "--m-max", "8"}).code, kExitOk);
    EXPECT_EQ(cli({"oracle-check", "--corrupt-ancillary"}).code, kExitFailure);
    EXPECT_EQ(cli({"oracle-check", "--n", "9"}).code, kExitDomain);
}

TEST(OracleCheck, MachinePrecisionWithoutNoise) {
    const auto r = oracle_check(1, 0.0, 16, 0);
    EXPECT_LT(r.worst(), 1e-13);
}

}  // namespace
}  // namespace qaeortho
