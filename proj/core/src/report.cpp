// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace kadapt {
namespace {

std::vector<int> qubits(std::uint64_t mask) {
  std::vector<int> out;
  for (int q = 0; q < 64; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

}  // namespace

std::int64_t assumed_quantum_calls(int evals_per_iteration, std::int64_t vqe_iterations,
                                   std::int64_t pool_size, std::int64_t screening_steps) {
  return evals_per_iteration * vqe_iterations + pool_size * screening_steps;
}

nlohmann::json CallReport::to_json() const {
  return {{"evals_per_iteration_assumption", evals_per_iteration_assumption},
          {"vqe_iterations", vqe_iterations},
          {"screening_evaluations", screening_evaluations},
          {"energy_evaluations", energy_evaluations},
          {"assumed_total", assumed_total},
          {"measured_total", measured_total}};
}

CallReport quantum_call_report(const AdaptResult& r, int evals_per_iteration_assumption) {
  CallReport c;
  c.evals_per_iteration_assumption = evals_per_iteration_assumption;
  c.vqe_iterations = r.total_iterations;
  c.screening_evaluations = r.quantum_calls.screening_evaluations;
  c.energy_evaluations = r.quantum_calls.energy_evaluations;
  c.assumed_total = evals_per_iteration_assumption * c.vqe_iterations + c.screening_evaluations;
  c.measured_total = c.energy_evaluations + c.screening_evaluations;
  return c;
}

CallRatio call_ratio(const CallReport& a, const CallReport& b) {
  CallRatio r;
  r.assumed = b.assumed_total > 0 ? static_cast<double>(a.assumed_total) / b.assumed_total : 0.0;
  r.measured = b.measured_total > 0 ? static_cast<double>(a.measured_total) / b.measured_total : 0.0;
  return r;
}

std::string approx_ratio(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "~%.1f", ratio);
  return buf;
}

std::optional<int> iterations_to_accuracy(const AdaptResult& r, double reference,
                                          double threshold) {
  for (const auto& p : r.energy_trace) {
    if (p.energy - reference < threshold) return p.cumulative_iterations;
  }
  return std::nullopt;
}

std::size_t AnsatzReport::operator_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : chunks) n += c.operators.size();
  return n;
}

AnsatzReport ansatz_report(const AdaptResult& r, const OperatorPool& pool) {
  AnsatzReport rep;
  for (const auto& e : r.ansatz) {
    if (rep.chunks.empty() || rep.chunks.back().step != e.step) {
      rep.chunks.push_back(AnsatzChunk{e.step, {}, false});
    }
    const auto& op = pool.operators.at(e.pool_index);
    rep.chunks.back().operators.push_back(AnsatzReportEntry{
        op.label, op.pqrs(), qubits(op.support_mask()), qubits(op.z_string_mask()), e.parameter,
        op.same_spin()});
  }
  for (auto& chunk : rep.chunks) {
    for (std::size_t a = 0; a < chunk.operators.size() && !chunk.support_overlap; ++a) {
      for (std::size_t b = a + 1; b < chunk.operators.size(); ++b) {
        const auto& sa = chunk.operators[a].support_qubits;
        const auto& sb = chunk.operators[b].support_qubits;
        bool hit = false;
        for (int q : sa) hit = hit || std::find(sb.begin(), sb.end(), q) != sb.end();
        if (hit) {
          chunk.support_overlap = true;
          break;
        }
      }
    }
  }
  return rep;
}

nlohmann::json AnsatzReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : chunks) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& e : c.operators) {
      ops.push_back({{"label", e.label},
                     {"pqrs", e.pqrs},
                     {"support_qubits", e.support_qubits},
                     {"z_qubits", e.z_qubits},
                     {"parameter", e.parameter},
                     {"same_spin", e.same_spin}});
    }
    out.push_back({{"step", c.step}, {"support_overlap", c.support_overlap}, {"operators", ops}});
  }
  return out;
}

std::string AnsatzReport::to_text(int n_qubits) const {
  std::ostringstream os;
  for (const auto& c : chunks) {
    os << "chunk " << c.step + 1 << (c.support_overlap ? "  [overlapping support]" : "") << '\n';
    for (const auto& e : c.operators) {
      std::string row(static_cast<std::size_t>(n_qubits), '.');
      for (int q : e.z_qubits) row[static_cast<std::size_t>(q)] = 'z';
      for (int q : e.support_qubits) row[static_cast<std::size_t>(q)] = 'o';
      char buf[64];
      std::snprintf(buf, sizeof(buf), "% .6f", e.parameter);
      os << "  " << row << "  " << e.label << "  theta=" << buf
         << (e.same_spin ? "  same-spin" : "") << '\n';
    }
  }
  return os.str();
}

nlohmann::json result_to_json(const AdaptResult& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : r.energy_trace) trace.push_back({p.cumulative_iterations, p.energy});
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"step", s.step},
                     {"selected", s.selected},
                     {"max_gradient", s.max_gradient},
                     {"iterations", s.iterations},
                     {"evaluations", s.evaluations},
                     {"energy_before", s.energy_before},
                     {"energy_after", s.energy_after},
                     {"optimizer_converged", s.optimizer_converged}});
  }
  nlohmann::json ansatz = nlohmann::json::array();
  for (const auto& e : r.ansatz) {
    ansatz.push_back({{"label", e.label},
                      {"pool_index", e.pool_index},
                      {"parameter", e.parameter},
                      {"step", e.step},
                      {"selection_gradient", e.selection_gradient}});
  }
  return {{"initial_energy", r.initial_energy},
          {"final_energy", r.final_energy},
          {"total_iterations", r.total_iterations},
          {"converged_by", to_string(r.converged_by)},
          {"quantum_calls",
           {{"screening_evaluations", r.quantum_calls.screening_evaluations},
            {"energy_evaluations", r.quantum_calls.energy_evaluations}}},
          {"ansatz", ansatz},
          {"steps", steps},
          {"energy_trace", trace}};
}

}  // namespace kadapt
