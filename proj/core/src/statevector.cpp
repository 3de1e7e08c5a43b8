// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "kadapt/error.hpp"

namespace kadapt {
namespace {

Complex i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

void check_register(int n) {
  if (n < 0 || n > 30) {
    throw DimensionError("statevector register of " + std::to_string(n) +
                         " qubits is outside the supported range [0, 30]");
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw DimensionError("qubit-count mismatch: state has " + std::to_string(a) +
                         ", operator has " + std::to_string(b));
  }
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector::Statevector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("amplitude count does not equal 2^n_qubits");
  }
}

Statevector Statevector::basis_state(int n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension()) throw DimensionError("basis index outside register");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ComputationError("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

void Statevector::apply_pauli_rotation(const PauliTerm& p, double angle) {
  check_same(n_qubits_, p.n_qubits);
  if (std::abs(std::abs(p.coefficient) - 1.0) > 1e-12) {
    throw StructureError("rotation string must carry a unit-modulus coefficient");
  }
  const double c = std::cos(angle);
  const Complex is = Complex{0.0, std::sin(angle)} * p.coefficient;
  const Complex y_phase = i_pow(std::popcount(p.x_mask & p.z_mask));
  const std::uint64_t x = p.x_mask;
  const std::uint64_t z = p.z_mask;
  const std::size_t dim = amps_.size();

  if (x == 0) {
    // Diagonal: P|b> = ±|b>.
    const Complex plus = c + is;
    const Complex minus = c - is;
    for (std::size_t b = 0; b < dim; ++b) amps_[b] *= parity_sign(b & z) > 0 ? plus : minus;
    return;
  }
  const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & high) continue;
    const std::size_t b2 = b ^ x;
    const Complex a1 = amps_[b];
    const Complex a2 = amps_[b2];
    // P|b> = ph(b)|b^x>
    const Complex ph1 = y_phase * parity_sign(b & z);
    const Complex ph2 = y_phase * parity_sign(b2 & z);
    amps_[b] = c * a1 + is * ph2 * a2;
    amps_[b2] = c * a2 + is * ph1 * a1;
  }
}

void Statevector::apply_excitation(const RotationFactors& factors, double theta) {
  if (theta == 0.0) return;
  for (std::size_t a = 0; a < factors.factors.size(); ++a) {
    apply_pauli_rotation(factors.factors[a].string, factors.angle(a, theta));
  }
}

Statevector Statevector::apply(const PauliTerm& p) const {
  check_same(n_qubits_, p.n_qubits);
  Statevector out(n_qubits_);
  out.amps_[0] = 0.0;
  const Complex phase = p.coefficient * i_pow(std::popcount(p.x_mask & p.z_mask));
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    out.amps_[b ^ p.x_mask] += phase * parity_sign(b & p.z_mask) * amps_[b];
  }
  return out;
}

Statevector Statevector::apply(const PauliSum& h) const {
  check_same(n_qubits_, h.n_qubits());
  Statevector out(n_qubits_);
  out.amps_[0] = 0.0;
  for (const auto& t : h.terms()) {
    const Complex phase = t.coefficient * i_pow(std::popcount(t.x_mask & t.z_mask));
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      out.amps_[b ^ t.x_mask] += phase * parity_sign(b & t.z_mask) * amps_[b];
    }
  }
  return out;
}

Complex Statevector::expectation(const PauliTerm& p) const {
  check_same(n_qubits_, p.n_qubits);
  Complex acc{0.0, 0.0};
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    acc += std::conj(amps_[b ^ p.x_mask]) * parity_sign(b & p.z_mask) * amps_[b];
  }
  return acc * p.coefficient * i_pow(std::popcount(p.x_mask & p.z_mask));
}

Complex Statevector::inner(const Statevector& other) const {
  check_same(n_qubits_, other.n_qubits_);
  Complex acc{0.0, 0.0};
  for (std::size_t b = 0; b < amps_.size(); ++b) acc += std::conj(amps_[b]) * other.amps_[b];
  return acc;
}

Statevector hartree_fock_state(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons > n_qubits) {
    throw DimensionError("cannot place " + std::to_string(n_electrons) + " electrons in " +
                         std::to_string(n_qubits) + " spin orbitals");
  }
  const std::uint64_t occupied =
      n_electrons == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_electrons) - 1;
  return Statevector::basis_state(n_qubits, occupied);
}

Complex expectation_complex(const Statevector& psi, const PauliSum& h) {
  check_same(psi.n_qubits(), h.n_qubits());
  Complex acc{0.0, 0.0};
  for (const auto& t : h.terms()) acc += psi.expectation(t);
  return acc;
}

double expectation(const Statevector& psi, const PauliSum& h) {
  const Complex e = expectation_complex(psi, h);
  if (std::abs(e.imag()) > 1e-10) {
    throw ComputationError("expectation of a non-Hermitian observable has imaginary part " +
                           std::to_string(e.imag()));
  }
  return e.real();
}

CompiledObservable::CompiledObservable(const PauliSum& h) : n_qubits_(h.n_qubits()) {
  check_register(n_qubits_);
  const std::size_t dim = std::size_t{1} << n_qubits_;
  diagonal_real_.assign(dim, 0.0);
  diagonal_imag_.assign(dim, 0.0);
  std::map<std::uint64_t, Group> groups;
  const PauliSum merged = simplify(h);
  for (const auto& t : merged.terms()) {
    if (t.x_mask == 0) {
      for (std::size_t b = 0; b < dim; ++b) {
        const double s = parity_sign(b & t.z_mask);
        diagonal_real_[b] += s * t.coefficient.real();
        diagonal_imag_[b] += s * t.coefficient.imag();
      }
      continue;
    }
    auto& g = groups[t.x_mask];
    g.x_mask = t.x_mask;
    g.z_masks.push_back(t.z_mask);
    g.coefficients.push_back(t.coefficient * i_pow(std::popcount(t.x_mask & t.z_mask)));
  }
  for (auto& [x, g] : groups) groups_.push_back(std::move(g));
}

Complex CompiledObservable::expectation(const Statevector& psi) const {
  check_same(psi.n_qubits(), n_qubits_);
  const auto a = psi.amplitudes();
  const std::size_t dim = a.size();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    const double p = std::norm(a[b]);
    re += p * diagonal_real_[b];
    im += p * diagonal_imag_[b];
  }
  Complex acc{re, im};
  for (const auto& g : groups_) {
    Complex group_acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
      const Complex overlap = std::conj(a[b ^ g.x_mask]) * a[b];
      if (overlap == Complex{0.0, 0.0}) continue;
      Complex w{0.0, 0.0};
      for (std::size_t k = 0; k < g.z_masks.size(); ++k) {
        w += parity_sign(b & g.z_masks[k]) * g.coefficients[k];
      }
      group_acc += overlap * w;
    }
    acc += group_acc;
  }
  return acc;
}

}  // namespace kadapt
