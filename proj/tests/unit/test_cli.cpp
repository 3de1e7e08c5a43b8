// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace kadapt {
namespace {

const std::filesystem::path kFixtures{KADAPT_FIXTURE_DIR};

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kadapt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kadapt_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

TEST(Cli, RunHydrogenWritesArtifacts) {
  const auto dir = scratch_dir("run");
  const auto r = invoke({"run", "--fcidump", (kFixtures / "h2_0.74.fcidump").string(), "--k", "1", "--out",
                         dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("FCI energy"), std::string::npos);
  const auto j = read_json(dir / "result.json");
  EXPECT_LT(std::abs(j.at("error").get<double>()), 1e-6);
  EXPECT_EQ(j.at("manifest").at("k"), 1);
  EXPECT_EQ(j.at("pool_size"), 1);
  for (const char* f : {"trace.csv", "ansatz.txt", "ansatz.json"}) {
    std::ifstream in(dir / f);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("# manifest: ", 0) == 0 || first == "{", true) << f;
  }
}

TEST(Cli, ManifestRoundTripReproducesEnergies) {
  const auto dir = scratch_dir("roundtrip");
  const auto first = invoke({"run", "--fcidump", (kFixtures / "lih_1.60.fcidump").string(), "--k", "2",
                             "--max-ops", "4", "--total-iters", "60", "--out", dir.string()});
  ASSERT_EQ(first.code, 0) << first.err;
  const auto a = read_json(dir / "result.json");

  const auto again = scratch_dir("roundtrip_again");
  const auto second = invoke({"run", "--manifest", (dir / "result.json").string(), "--out", again.string()});
  ASSERT_EQ(second.code, 0) << second.err;
  const auto b = read_json(again / "result.json");
  EXPECT_NEAR(a.at("result").at("final_energy").get<double>(), b.at("result").at("final_energy").get<double>(),
              1e-10);
  EXPECT_EQ(a.at("result").at("energy_trace"), b.at("result").at("energy_trace"));
  auto ma = a.at("manifest");
  auto mb = b.at("manifest");
  ma.erase("output_dir");
  mb.erase("output_dir");
  EXPECT_EQ(ma, mb);
}

TEST(Cli, ManifestFieldsRoundTrip) {
  cli::RunManifest m;
  m.fcidump = "x.fcidump";
  m.k = 3;
  m.max_operators = 9;
  m.iterations_per_step = 17;
  m.total_iterations = 99;
  m.gradient_threshold = 2e-4;
  m.f_tolerance = 5e-5;
  m.initial_step = 0.05;
  m.output_dir = "out";
  m.seed = 7;
  const auto back = cli::RunManifest::from_json(m.to_json());
  EXPECT_EQ(back.to_json(), m.to_json());
  EXPECT_EQ(cli::RunManifest::from_json({{"manifest", m.to_json()}}).to_json(), m.to_json());
}

TEST(Cli, DefaultScheduleFollowsChunkSize) {
  cli::RunManifest m;
  m.k = 5;
  EXPECT_EQ(m.effective_iterations_per_step(), 200);
  m.k = 1;
  EXPECT_EQ(m.effective_iterations_per_step(), 40);
  m.iterations_per_step = 13;
  EXPECT_EQ(m.adapt_config().vqe_iterations_per_step, 13);
}

TEST(Cli, MissingFileExitsTwoAndNamesPath) {
  const auto r = invoke({"run", "--fcidump", "/tmp/definitely_missing.fcidump"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/tmp/definitely_missing.fcidump"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"run"}).code, 2);
  EXPECT_EQ(invoke({"run", "--fcidump", (kFixtures / "h2_0.74.fcidump").string(), "--k", "0"}).code, 2);
  EXPECT_EQ(invoke({"run", "--k", "notanumber"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, PoolInfo) {
  const auto h2 = invoke({"pool-info", "--fcidump", (kFixtures / "h2_0.74.fcidump").string()});
  ASSERT_EQ(h2.code, 0);
  EXPECT_NE(h2.out.find("pool size      1\n"), std::string::npos);
  const auto lih = invoke({"pool-info", "--fcidump", (kFixtures / "lih_1.60.fcidump").string()});
  EXPECT_NE(lih.out.find("pool size      76\n"), std::string::npos);
  const auto beh2 = invoke({"pool-info", "--fcidump", (kFixtures / "beh2_1.30.fcidump").string(), "--json"});
  EXPECT_EQ(nlohmann::json::parse(beh2.out).at("size"), 180);
}

TEST(Cli, FciVerb) {
  const auto r = invoke({"fci", "--fcidump", (kFixtures / "h2_0.74.fcidump").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-1.1372838345"), std::string::npos);
}

TEST(Cli, CompareSingleRunHasNoRatios) {
  const auto r = invoke({"compare", "--fcidump", (kFixtures / "h2_0.74.fcidump").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("run_a,run_b"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) rows += !line.empty() && line[0] != '#';
  EXPECT_EQ(rows, 2);  // header + one run
}

TEST(Cli, CompareIdenticalRunsGivesUnitRatio) {
  const auto f = (kFixtures / "lih_1.60.fcidump").string();
  const auto r = invoke({"compare", "--fcidump", f, "--ks", "2", "2", "--max-ops", "2", "--total-iters", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("run_a,run_b");
  ASSERT_NE(pos, std::string::npos);
  std::istringstream rest(r.out.substr(pos));
  std::string header;
  std::string row;
  std::getline(rest, header);
  std::getline(rest, row);
  EXPECT_EQ(row.rfind("0,1,2,2,1,1,1,~1.0", 0), 0u) << row;
}

TEST(Cli, CompareRefusesMismatchedFixtures) {
  const auto dir = scratch_dir("mismatch");
  std::filesystem::create_directories(dir);
  cli::RunManifest a;
  a.fcidump = kFixtures / "lih_1.60.fcidump";
  cli::RunManifest b;
  b.fcidump = kFixtures / "lih_2.00.fcidump";
  std::ofstream(dir / "a.json") << a.to_json().dump();
  std::ofstream(dir / "b.json") << b.to_json().dump();
  const auto r = invoke({"compare", "--manifest", (dir / "a.json").string(), "--manifest", (dir / "b.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("different fixtures"), std::string::npos);
}

TEST(Cli, ScanSingleFileGivesOneRow) {
  const auto r = invoke({"scan", "--glob", (kFixtures / "h2_0.74.fcidump").string(), "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].rfind("h2_0.74.fcidump,h2,0.74,", 0), 0u) << rows[1];
}

TEST(Cli, ScanSortsByBondLength) {
  const auto r = invoke({"scan", "--glob", (kFixtures / "h2_1.*.fcidump").string(), "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto a = r.out.find("h2_1.00");
  const auto b = r.out.find("h2_1.80");
  ASSERT_NE(a, std::string::npos);
  ASSERT_NE(b, std::string::npos);
  EXPECT_LT(a, b);
}

TEST(Cli, ScanRejectsMixedOrbitalCounts) {
  const auto r = invoke({"scan", "--glob", (kFixtures / "h2_0.74.fcidump").string(), "--glob",
                         (kFixtures / "lih_1.60.fcidump").string(), "--max-ops", "1", "--total-iters", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("inconsistent orbital counts"), std::string::npos);
}

TEST(Cli, ScanWithNoMatchesIsAUsageError) {
  EXPECT_EQ(invoke({"scan", "--glob", "/nonexistent/*.fcidump"}).code, 2);
}

}  // namespace
}  // namespace kadapt
