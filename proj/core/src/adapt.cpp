// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/adapt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "kadapt/error.hpp"

namespace kadapt {

void AdaptConfig::validate() const {
  if (k < 1) throw StructureError("chunk size k must be >= 1");
  if (max_operators < 1) throw StructureError("max_operators must be >= 1");
  if (vqe_iterations_per_step < 1) throw StructureError("vqe_iterations_per_step must be >= 1");
  if (total_iteration_budget < 0) throw StructureError("total_iteration_budget must be >= 0");
  if (!(gradient_threshold > 0.0)) throw StructureError("gradient_threshold must be > 0");
  optimizer.validate();
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::gradient_threshold: return "gradient_threshold";
    case StopReason::operator_budget: return "operator_budget";
    case StopReason::iteration_budget: return "iteration_budget";
  }
  return "unknown";
}

std::vector<double> AdaptResult::parameters() const {
  std::vector<double> out;
  out.reserve(ansatz.size());
  for (const auto& e : ansatz) out.push_back(e.parameter);
  return out;
}

std::vector<std::size_t> AdaptResult::operator_indices() const {
  std::vector<std::size_t> out;
  out.reserve(ansatz.size());
  for (const auto& e : ansatz) out.push_back(e.pool_index);
  return out;
}

namespace {

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

Complex i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

GradientScreen::GradientScreen(const OperatorPool& pool) : n_qubits_(pool.n_qubits) {
  if (!pool.commutators_ready()) {
    throw StructureError("pool commutators must be precomputed before screening");
  }
  // Assign each distinct string an index, grouped by X mask.
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint32_t>> by_x;
  for (const auto& op : pool.operators) {
    for (const auto& t : op.commutator_with_h->terms()) by_x[t.x_mask][t.z_mask] = 0;
  }
  std::uint32_t next = 0;
  for (auto& [x, zs] : by_x) {
    Group g;
    g.x_mask = x;
    g.first = next;
    for (auto& [z, idx] : zs) {
      idx = next++;
      g.z_masks.push_back(z);
    }
    groups_.push_back(std::move(g));
  }
  strings_ = next;
  ops_.reserve(pool.size());
  for (const auto& op : pool.operators) {
    std::vector<Entry> entries;
    entries.reserve(op.commutator_with_h->size());
    for (const auto& t : op.commutator_with_h->terms()) {
      entries.push_back({by_x[t.x_mask][t.z_mask], t.coefficient});
    }
    ops_.push_back(std::move(entries));
  }
}

std::vector<double> GradientScreen::evaluate(const Statevector& psi) const {
  if (psi.n_qubits() != n_qubits_) {
    throw DimensionError("state and pool disagree on qubit count");
  }
  const auto a = psi.amplitudes();
  std::vector<Complex> value(strings_);
  for (const auto& g : groups_) {
    std::vector<Complex> acc(g.z_masks.size());
    for (std::size_t b = 0; b < a.size(); ++b) {
      const Complex overlap = std::conj(a[b ^ g.x_mask]) * a[b];
      if (overlap == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < g.z_masks.size(); ++k) {
        acc[k] += parity_sign(b & g.z_masks[k]) * overlap;
      }
    }
    for (std::size_t k = 0; k < g.z_masks.size(); ++k) {
      value[g.first + k] = acc[k] * i_pow(std::popcount(g.x_mask & g.z_masks[k]));
    }
  }
  std::vector<double> grads(ops_.size());
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    Complex e{0.0, 0.0};
    for (const auto& entry : ops_[j]) e += entry.coefficient * value[entry.string];
    const Complex g = Complex{0.0, -1.0} * e;
    if (std::abs(g.imag()) > 1e-10) {
      throw ComputationError("screening value has imaginary residue " + std::to_string(g.imag()));
    }
    grads[j] = g.real();
  }
  return grads;
}

std::vector<double> gradient_screen(const Statevector& psi, const OperatorPool& pool,
                                    QuantumCallLedger* ledger) {
  auto grads = GradientScreen(pool).evaluate(psi);
  if (ledger) ledger->screening_evaluations += static_cast<std::int64_t>(pool.size());
  return grads;
}

std::vector<std::size_t> select_top_k(std::span<const double> gradients, std::size_t k) {
  // Magnitudes are compared on a 1e-12 grid so that values equal up to
  // rounding tie and fall back to canonical order.
  std::vector<std::size_t> idx(gradients.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<long double> key(gradients.size());
  for (std::size_t i = 0; i < gradients.size(); ++i) {
    key[i] = std::nearbyint(static_cast<long double>(std::abs(gradients[i])) * 1e12L);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  idx.resize(std::min(k, idx.size()));
  return idx;
}

Statevector prepare_ansatz_state(const Statevector& initial, const OperatorPool& pool,
                                 std::span<const std::size_t> operators,
                                 std::span<const double> parameters) {
  if (operators.size() != parameters.size()) {
    throw StructureError("operator and parameter counts differ");
  }
  Statevector psi = initial;
  for (std::size_t i = 0; i < operators.size(); ++i) {
    apply_excitation(psi, pool.operators.at(operators[i]), parameters[i]);
  }
  return psi;
}

AdaptResult run_adapt(const PauliSum& h, const OperatorPool& pool, const Statevector& initial,
                      const AdaptConfig& cfg, const Optimizer& optimizer,
                      const StepCallback& on_step) {
  cfg.validate();
  if (pool.size() == 0) throw StructureError("operator pool is empty");
  if (h.n_qubits() != pool.n_qubits || initial.n_qubits() != pool.n_qubits) {
    throw DimensionError("Hamiltonian, pool and initial state must share a register");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-10) throw StructureError("initial state is not normalized");

  const GradientScreen screen(pool);
  const CompiledObservable observable(h);

  AdaptResult result;
  std::vector<std::size_t> ops;
  std::vector<double> params;

  Statevector work = initial;
  auto energy = [&](std::span<const double> theta) {
    work = initial;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      apply_excitation(work, pool.operators[ops[i]], theta[i]);
    }
    ++result.quantum_calls.energy_evaluations;
    return observable.expectation(work).real();
  };

  result.initial_energy = observable.expectation(initial).real();
  result.final_energy = result.initial_energy;
  result.energy_trace.push_back({0, result.initial_energy});

  for (int step = 0;; ++step) {
    if (static_cast<int>(ops.size()) >= cfg.max_operators) {
      result.converged_by = StopReason::operator_budget;
      break;
    }
    const int remaining = cfg.total_iteration_budget > 0
                              ? cfg.total_iteration_budget - result.total_iterations
                              : cfg.vqe_iterations_per_step;
    if (remaining <= 0) {
      result.converged_by = StopReason::iteration_budget;
      break;
    }

    const Statevector psi = prepare_ansatz_state(initial, pool, ops, params);
    const auto grads = screen.evaluate(psi);
    result.quantum_calls.screening_evaluations += static_cast<std::int64_t>(pool.size());
    double gmax = 0.0;
    for (double g : grads) gmax = std::max(gmax, std::abs(g));
    if (gmax < cfg.gradient_threshold) {
      result.converged_by = StopReason::gradient_threshold;
      result.final_gradients = grads;
      break;
    }

    const std::size_t room = static_cast<std::size_t>(cfg.max_operators) - ops.size();
    const auto chosen = select_top_k(grads, std::min<std::size_t>(cfg.k, room));
    for (std::size_t j : chosen) {
      ops.push_back(j);
      params.push_back(0.0);
      result.ansatz.push_back({j, pool.operators[j].label, 0.0, step, grads[j]});
    }

    OptimizerConfig oc = cfg.optimizer;
    oc.max_iterations = std::min(cfg.vqe_iterations_per_step, remaining);
    const int evals_before = static_cast<int>(result.quantum_calls.energy_evaluations);
    const auto outcome = optimizer.minimize(energy, params, oc);

    StepRecord rec;
    rec.step = step;
    rec.selected = chosen;
    rec.max_gradient = gmax;
    rec.iterations = outcome.n_iterations;
    rec.evaluations = static_cast<int>(result.quantum_calls.energy_evaluations) - evals_before;
    rec.energy_before = result.final_energy;
    rec.optimizer_converged = outcome.converged;

    // Keep the incoming point if the optimizer could not beat it.
    if (outcome.best_energy <= result.final_energy) {
      params = outcome.best_parameters;
      result.final_energy = outcome.best_energy;
    }
    rec.energy_after = result.final_energy;
    for (std::size_t i = 0; i < params.size(); ++i) result.ansatz[i].parameter = params[i];

    for (std::size_t i = 0; i < outcome.best_trace.size(); ++i) {
      const double best = std::min(outcome.best_trace[i], result.energy_trace.back().energy);
      result.energy_trace.push_back({result.total_iterations + static_cast<int>(i) + 1, best});
    }
    result.total_iterations += outcome.n_iterations;
    result.steps.push_back(rec);
    if (on_step) on_step(rec);
  }
  return result;
}

}  // namespace kadapt
