// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kadapt/mapping.hpp"
#include "kadapt/pauli.hpp"

namespace kadapt {

/// Dense 2^n amplitude vector. Basis index bit k is the occupation of qubit k.
class Statevector {
 public:
  Statevector() = default;
  /// |0...0>
  explicit Statevector(int n_qubits);
  Statevector(int n_qubits, std::vector<Complex> amplitudes);

  static Statevector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  /// In place: psi <- cos(angle) psi + i sin(angle) P psi, i.e. exp(i angle P).
  /// P must have a unit-modulus coefficient.
  void apply_pauli_rotation(const PauliTerm& p, double angle);

  /// Applies exp(theta G) through its commuting rotation factors.
  void apply_excitation(const RotationFactors& factors, double theta);

  /// P psi for a single weighted string (out-of-place).
  Statevector apply(const PauliTerm& p) const;
  /// H psi for a Pauli sum (out-of-place).
  Statevector apply(const PauliSum& h) const;

  /// <psi|P|psi> including the term's coefficient.
  Complex expectation(const PauliTerm& p) const;

  Complex inner(const Statevector& other) const;  // <this|other>

 private:
  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Basis state with spin orbitals 0..n_electrons-1 occupied.
Statevector hartree_fock_state(int n_qubits, int n_electrons);

/// Σ coeff <psi|P|psi>, complex (purely imaginary for anti-Hermitian sums).
Complex expectation_complex(const Statevector& psi, const PauliSum& h);

/// Real expectation of a Hermitian sum; throws ComputationError if the
/// imaginary residue exceeds 1e-10.
double expectation(const Statevector& psi, const PauliSum& h);

/// Hermitian Pauli sum pre-arranged for repeated expectation values: diagonal
/// strings are folded into one precomputed diagonal and the rest grouped by
/// X mask so each group needs a single pass over amplitude pairs.
class CompiledObservable {
 public:
  CompiledObservable() = default;
  explicit CompiledObservable(const PauliSum& h);

  int n_qubits() const noexcept { return n_qubits_; }
  Complex expectation(const Statevector& psi) const;

 private:
  struct Group {
    std::uint64_t x_mask = 0;
    std::vector<std::uint64_t> z_masks;
    std::vector<Complex> coefficients;  // already multiplied by i^{|x&z|}
  };
  int n_qubits_ = 0;
  std::vector<double> diagonal_real_;
  std::vector<double> diagonal_imag_;
  std::vector<Group> groups_;
};

}  // namespace kadapt
