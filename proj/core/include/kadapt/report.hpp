// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kadapt/adapt.hpp"
#include "kadapt/pool.hpp"

namespace kadapt {

inline constexpr double kChemicalAccuracy = 1e-3;  // Hartree

/// assumed = evals_per_iteration * vqe_iterations + pool_size * screening_steps.
std::int64_t assumed_quantum_calls(int evals_per_iteration, std::int64_t vqe_iterations,
                                   std::int64_t pool_size, std::int64_t screening_steps);

struct CallReport {
  int evals_per_iteration_assumption = 3;
  std::int64_t vqe_iterations = 0;
  std::int64_t screening_evaluations = 0;
  std::int64_t energy_evaluations = 0;
  std::int64_t assumed_total = 0;   // assumption * iterations + screening
  std::int64_t measured_total = 0;  // energy evaluations + screening

  nlohmann::json to_json() const;
};

CallReport quantum_call_report(const AdaptResult& r, int evals_per_iteration_assumption = 3);

/// Ratio of two runs' totals (a / b), assumed and measured.
struct CallRatio {
  double assumed = 0.0;
  double measured = 0.0;
};
CallRatio call_ratio(const CallReport& a, const CallReport& b);

/// Renders a ratio the way it is usually quoted, e.g. 4.2727 -> "~4.3".
std::string approx_ratio(double ratio);

/// First cumulative iteration whose best-so-far energy is within `threshold`
/// of `reference`, if any.
std::optional<int> iterations_to_accuracy(const AdaptResult& r, double reference,
                                          double threshold = kChemicalAccuracy);

struct AnsatzReportEntry {
  std::string label;
  std::array<int, 4> pqrs{};
  std::vector<int> support_qubits;
  std::vector<int> z_qubits;
  double parameter = 0.0;
  bool same_spin = false;
};

struct AnsatzChunk {
  int step = 0;
  std::vector<AnsatzReportEntry> operators;
  /// True when two operators of the chunk act on a common qubit.
  bool support_overlap = false;
};

struct AnsatzReport {
  std::vector<AnsatzChunk> chunks;

  bool empty() const noexcept { return chunks.empty(); }
  std::size_t operator_count() const noexcept;
  nlohmann::json to_json() const;
  /// One line per operator with a qubit diagram: 'o' marks p,q,r,s, 'z' the
  /// parity string, '.' identity.
  std::string to_text(int n_qubits) const;
};

AnsatzReport ansatz_report(const AdaptResult& r, const OperatorPool& pool);

/// Trace, ledger and stop reason as JSON.
nlohmann::json result_to_json(const AdaptResult& r);

}  // namespace kadapt
