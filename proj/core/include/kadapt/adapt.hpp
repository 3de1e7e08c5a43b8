// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kadapt/optimizer.hpp"
#include "kadapt/pauli.hpp"
#include "kadapt/pool.hpp"
#include "kadapt/statevector.hpp"

namespace kadapt {

struct AdaptConfig {
  int k = 5;
  int max_operators = 25;
  /// Optimizer iteration cap for each ADAPT step.
  int vqe_iterations_per_step = 200;
  /// Cap on optimizer iterations summed over all steps; 0 means no cap.
  int total_iteration_budget = 0;
  /// Stop when max |gradient| falls below this value.
  double gradient_threshold = 1e-3;
  OptimizerConfig optimizer;

  void validate() const;
};

enum class StopReason { gradient_threshold, operator_budget, iteration_budget };

std::string to_string(StopReason r);

/// Quantum function calls: one screening evaluation per pool commutator per
/// step, one energy evaluation per objective call.
struct QuantumCallLedger {
  std::int64_t screening_evaluations = 0;
  std::int64_t energy_evaluations = 0;
};

struct AnsatzEntry {
  std::size_t pool_index = 0;
  std::string label;
  double parameter = 0.0;
  int step = 0;                    // ADAPT step (chunk) that appended it, 0-based
  double selection_gradient = 0.0;  // gradient when it was selected
};

struct TracePoint {
  int cumulative_iterations = 0;
  double energy = 0.0;  // best so far
};

struct StepRecord {
  int step = 0;
  std::vector<std::size_t> selected;  // pool indices, descending |gradient|
  double max_gradient = 0.0;
  int iterations = 0;
  int evaluations = 0;
  double energy_before = 0.0;
  double energy_after = 0.0;
  bool optimizer_converged = false;
};

struct AdaptResult {
  std::vector<AnsatzEntry> ansatz;
  std::vector<TracePoint> energy_trace;
  std::vector<StepRecord> steps;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  int total_iterations = 0;
  QuantumCallLedger quantum_calls;
  StopReason converged_by = StopReason::operator_budget;
  /// Gradients from the screening that ended the run (gradient_threshold only).
  std::vector<double> final_gradients;

  std::vector<double> parameters() const;
  std::vector<std::size_t> operator_indices() const;
};

/// Batched evaluator for -i<psi|[P_j, H]|psi> over a whole pool. Every Pauli
/// string occurring in any commutator is measured once per call and the
/// results are recombined per operator.
class GradientScreen {
 public:
  explicit GradientScreen(const OperatorPool& pool);

  std::size_t size() const noexcept { return ops_.size(); }
  std::size_t unique_strings() const noexcept { return strings_; }
  std::vector<double> evaluate(const Statevector& psi) const;

 private:
  struct Entry {
    std::uint32_t string = 0;
    Complex coefficient;
  };
  struct Group {
    std::uint64_t x_mask = 0;
    std::vector<std::uint64_t> z_masks;
    std::uint32_t first = 0;  // index of the group's first string
  };
  int n_qubits_ = 0;
  std::size_t strings_ = 0;
  std::vector<Group> groups_;
  std::vector<std::vector<Entry>> ops_;
};

/// Entry j = -i<psi|[P_j, H]|psi> = dE/dtheta at theta = 0 for appending
/// exp(theta G_j). Adds pool.size() to the ledger when one is given.
std::vector<double> gradient_screen(const Statevector& psi, const OperatorPool& pool,
                                    QuantumCallLedger* ledger = nullptr);

/// Up to k indices by descending |gradient|. Pool order is canonical, so ties
/// (equal to 1e-12) resolve to the lower index, i.e. the lower label.
std::vector<std::size_t> select_top_k(std::span<const double> gradients, std::size_t k);

/// initial -> exp(theta_n G_n) ... exp(theta_1 G_1) initial.
Statevector prepare_ansatz_state(const Statevector& initial, const OperatorPool& pool,
                                 std::span<const std::size_t> operators,
                                 std::span<const double> parameters);

using StepCallback = std::function<void(const StepRecord&)>;

/// The chunked adaptive loop: screen, stop below threshold, append the top K
/// with zero parameters, re-optimise every parameter warm-started, repeat until
/// the operator or iteration budget is spent.
AdaptResult run_adapt(const PauliSum& h, const OperatorPool& pool, const Statevector& initial,
                      const AdaptConfig& cfg, const Optimizer& optimizer = Cobyla{},
                      const StepCallback& on_step = {});

}  // namespace kadapt
