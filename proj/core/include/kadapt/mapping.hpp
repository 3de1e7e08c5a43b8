// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "kadapt/fermion.hpp"
#include "kadapt/pauli.hpp"

namespace kadapt {

/// Jordan–Wigner image of a single ladder operator.
///
/// Spin-orbital j maps to qubit j, occupied = |1>. The parity string sits on
/// the lower-indexed qubits: a_j = ½(X_j + iY_j) Z_0 ... Z_{j-1}.
PauliSum jordan_wigner(LadderOp op, int n_qubits);

/// Linear Jordan–Wigner map of a fermionic operator; the result is simplified.
/// Throws DimensionError when a mode index is >= n_qubits.
PauliSum jordan_wigner(const FermionOperator& f, int n_qubits);

/// One commuting factor exp(sign * magnitude * theta * i * string).
struct RotationFactor {
  PauliTerm string;  // unit coefficient
  int sign = 1;
};

/// Exact factorisation of exp(theta * G) for a double-excitation generator G.
///
/// G is a sum of eight mutually commuting strings with purely imaginary
/// coefficients of equal modulus, G = i * magnitude * Σ sign_a P_a. Since the
/// strings commute, exp(theta G) = Π_a exp(i * sign_a * magnitude * theta * P_a)
/// holds exactly in any order.
struct RotationFactors {
  std::vector<RotationFactor> factors;  // canonical (x_mask, z_mask) order
  double magnitude = 0.0;

  /// Rotation angle for factor `a` at parameter theta.
  double angle(std::size_t a, double theta) const {
    return factors[a].sign * magnitude * theta;
  }
};

/// Throws StructureError unless `g` has exactly eight pairwise commuting strings
/// with purely imaginary, equal-modulus coefficients.
RotationFactors excitation_rotation_factors(const PauliSum& g);

}  // namespace kadapt
