// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kadapt/adapt.hpp"
#include "kadapt/error.hpp"
#include "kadapt/fixture.hpp"
#include "kadapt/report.hpp"

namespace kadapt::cli {

enum ExitCode : int { kOk = 0, kComputationFailure = 1, kUsageOrIo = 2 };

/// Bad flags, inconsistent inputs, or a request the tool refuses.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Everything needed to reproduce one run. Embedded in every output file.
struct RunManifest {
  std::filesystem::path fcidump;
  int k = 5;
  int max_operators = 25;
  /// 0 derives total_iterations * k / max_operators (200 for K=5, 40 for K=1).
  int iterations_per_step = 0;
  int total_iterations = 1000;
  double gradient_threshold = 1e-3;
  double f_tolerance = 1e-3;
  double initial_step = 0.1;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;

  int effective_iterations_per_step() const;
  AdaptConfig adapt_config() const;
  nlohmann::json to_json() const;
  /// Accepts either a bare manifest or an output document holding one under "manifest".
  static RunManifest from_json(const nlohmann::json& j);
  static RunManifest load(const std::filesystem::path& path);
};

struct RunOutcome {
  RunManifest manifest;
  FixtureMetadata metadata;
  int n_qubits = 0;
  std::size_t pool_size = 0;
  double hf_energy = 0.0;
  std::optional<double> fci_energy;
  AdaptResult result;
  CallReport calls;

  std::optional<double> error() const;
  nlohmann::json to_json(const AnsatzReport& ansatz) const;
};

/// Loads the problem, runs ADAPT and the exact reference. No files written.
RunOutcome execute(const RunManifest& m);
RunOutcome execute(const RunManifest& m, const MolecularProblem& problem);

/// Ground energy of the problem's HF sector, or nullopt above 24 qubits.
std::optional<double> reference_energy(const MolecularProblem& p, std::uint64_t seed = 0);

/// Writes result.json, trace.csv, ansatz.txt and ansatz.json under manifest.output_dir.
void write_artifacts(const RunOutcome& r, const MolecularProblem& problem);

struct ScanRow {
  std::filesystem::path file;
  std::string molecule;
  double bond_length = 0.0;
  double hf = 0.0;
  std::optional<double> fci;
  double adapt = 0.0;
  int iterations = 0;
};

/// Files matching a shell pattern, sorted by name.
std::vector<std::filesystem::path> expand_glob(const std::string& pattern);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kadapt::cli
