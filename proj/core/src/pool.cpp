// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/pool.hpp"

#include <algorithm>
#include <string>

#include "kadapt/error.hpp"
#include "kadapt/integrals.hpp"

namespace kadapt {
namespace {

std::vector<int> qubit_list(std::uint64_t mask) {
  std::vector<int> out;
  for (int q = 0; q < 64; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

bool ExcitationOperator::same_spin() const noexcept {
  return is_spin_down(occ[0]) == is_spin_down(occ[1]);
}

std::uint64_t ExcitationOperator::support_mask() const noexcept {
  std::uint64_t m = 0;
  for (int i : occ) m |= std::uint64_t{1} << i;
  for (int i : virt) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t ExcitationOperator::z_string_mask() const noexcept {
  std::uint64_t z = 0;
  for (const auto& f : rotation_factors.factors) z |= f.string.z_mask & ~f.string.x_mask;
  return z;
}

ExcitationOperator make_double_excitation(std::array<int, 2> occ, std::array<int, 2> virt,
                                          int n_qubits) {
  if (occ[0] > occ[1]) std::swap(occ[0], occ[1]);
  if (virt[0] > virt[1]) std::swap(virt[0], virt[1]);
  if (occ[0] == occ[1] || virt[0] == virt[1] || occ[1] >= virt[0]) {
    throw StructureError("double excitation needs distinct occupied indices below distinct virtuals");
  }
  ExcitationOperator op;
  op.occ = occ;
  op.virt = virt;
  op.label = "D[" + std::to_string(occ[0]) + "," + std::to_string(occ[1]) + "->" +
             std::to_string(virt[0]) + "," + std::to_string(virt[1]) + "]";
  const auto t = FermionOperator::term(
      1.0, {{virt[1], true}, {virt[0], true}, {occ[1], false}, {occ[0], false}});
  op.generator = t - t.adjoint();
  op.qubit_image = jordan_wigner(op.generator, n_qubits);
  op.rotation_factors = excitation_rotation_factors(op.qubit_image);
  return op;
}

std::size_t OperatorPool::mixed_spin_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      operators.begin(), operators.end(), [](const auto& op) { return !op.same_spin(); }));
}

std::size_t OperatorPool::same_spin_count() const noexcept {
  return operators.size() - mixed_spin_count();
}

bool OperatorPool::commutators_ready() const noexcept {
  return std::all_of(operators.begin(), operators.end(),
                     [](const auto& op) { return op.commutator_with_h.has_value(); });
}

std::size_t expected_pool_size(int n_electrons, int n_spin_orbitals) {
  const std::size_t o = static_cast<std::size_t>(n_electrons / 2);
  const std::size_t v = static_cast<std::size_t>((n_spin_orbitals - n_electrons) / 2);
  return o * o * v * v + 2 * choose2(o) * choose2(v);
}

OperatorPool build_pool(int n_electrons, int n_spin_orbitals) {
  if (n_electrons < 0 || n_electrons % 2 != 0) {
    throw StructureError("restricted reference needs an even electron count, got " +
                         std::to_string(n_electrons));
  }
  if (n_spin_orbitals % 2 != 0 || n_electrons >= n_spin_orbitals ||
      n_spin_orbitals > kMaxQubits) {
    throw StructureError("need an even spin-orbital count above the electron count");
  }
  OperatorPool pool;
  pool.n_qubits = n_spin_orbitals;
  pool.n_electrons = n_electrons;
  for (int o0 = 0; o0 < n_electrons; ++o0) {
    for (int o1 = o0 + 1; o1 < n_electrons; ++o1) {
      for (int v0 = n_electrons; v0 < n_spin_orbitals; ++v0) {
        for (int v1 = v0 + 1; v1 < n_spin_orbitals; ++v1) {
          const int occ_down = is_spin_down(o0) + is_spin_down(o1);
          const int virt_down = is_spin_down(v0) + is_spin_down(v1);
          if (occ_down != virt_down) continue;
          pool.operators.push_back(make_double_excitation({o0, o1}, {v0, v1}, n_spin_orbitals));
        }
      }
    }
  }
  return pool;
}

void precompute_commutators(OperatorPool& pool, const PauliSum& h) {
  if (h.n_qubits() != pool.n_qubits) {
    throw DimensionError("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                         " qubits, pool on " + std::to_string(pool.n_qubits));
  }
  for (auto& op : pool.operators) {
    const PauliSum hermitian = Complex{0.0, -1.0} * op.qubit_image;
    op.commutator_with_h = commutator(hermitian, h);
  }
}

void apply_excitation(Statevector& psi, const ExcitationOperator& op, double theta) {
  psi.apply_excitation(op.rotation_factors, theta);
}

nlohmann::json pool_summary(const OperatorPool& pool) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : pool.operators) {
    nlohmann::json j;
    j["label"] = op.label;
    j["occupied"] = op.occ;
    j["virtual"] = op.virt;
    j["same_spin"] = op.same_spin();
    j["pauli_strings"] = op.qubit_image.size();
    j["support_qubits"] = qubit_list(op.support_mask());
    j["z_qubits"] = qubit_list(op.z_string_mask());
    if (op.commutator_with_h) j["commutator_strings"] = op.commutator_with_h->size();
    ops.push_back(std::move(j));
  }
  return {{"n_qubits", pool.n_qubits},
          {"n_electrons", pool.n_electrons},
          {"size", pool.size()},
          {"mixed_spin", pool.mixed_spin_count()},
          {"same_spin", pool.same_spin_count()},
          {"operators", std::move(ops)}};
}

}  // namespace kadapt
