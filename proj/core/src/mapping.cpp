// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/mapping.hpp"

#include <cmath>
#include <string>

#include "detail/string_key.hpp"
#include "kadapt/error.hpp"

namespace kadapt {

PauliSum jordan_wigner(LadderOp op, int n_qubits) {
  if (op.mode < 0 || op.mode >= n_qubits) {
    throw DimensionError("mode " + std::to_string(op.mode) + " outside register of " +
                         std::to_string(n_qubits) + " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t parity = bit - 1;
  // a = ½(X + iY), a† = ½(X - iY), each carrying Z on lower qubits.
  const Complex y_coeff{0.0, op.creation ? -0.5 : 0.5};
  return PauliSum(n_qubits, {PauliTerm{n_qubits, bit, parity, 0.5},
                             PauliTerm{n_qubits, bit, parity | bit, y_coeff}});
}

PauliSum jordan_wigner(const FermionOperator& f, int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw DimensionError("qubit count outside [0, 64]");
  }
  detail::StringAccumulator acc;
  std::vector<PauliTerm> partial;
  std::vector<PauliTerm> next;
  for (const auto& term : f.terms()) {
    partial.assign(1, PauliTerm{n_qubits, 0, 0, term.coefficient});
    for (const auto& op : term.product) {
      const auto image = jordan_wigner(op, n_qubits);
      next.clear();
      for (const auto& p : partial) {
        for (const auto& q : image.terms()) next.push_back(multiply(p, q));
      }
      partial.swap(next);
    }
    for (const auto& p : partial) acc.add(p);
  }
  return acc.to_sum(n_qubits, kDefaultDropTolerance);
}

RotationFactors excitation_rotation_factors(const PauliSum& g) {
  const auto s = simplify(g);
  if (s.size() != 8) {
    throw StructureError("double-excitation generator must have 8 Pauli strings, found " +
                         std::to_string(s.size()));
  }
  const auto& terms = s.terms();
  const double magnitude = std::abs(terms.front().coefficient);
  RotationFactors out;
  out.magnitude = magnitude;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    const auto& t = terms[a];
    if (std::abs(t.coefficient.real()) > 1e-12 * magnitude ||
        std::abs(std::abs(t.coefficient.imag()) - magnitude) > 1e-12 * magnitude) {
      throw StructureError("generator coefficients must be purely imaginary with equal modulus");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (!commutes(t, terms[b])) {
        throw StructureError("generator strings do not mutually commute");
      }
    }
    out.factors.push_back({PauliTerm{t.n_qubits, t.x_mask, t.z_mask, 1.0},
                           t.coefficient.imag() > 0.0 ? 1 : -1});
  }
  return out;
}

}  // namespace kadapt
