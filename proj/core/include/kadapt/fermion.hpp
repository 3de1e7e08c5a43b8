// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace kadapt {

using Complex = std::complex<double>;

/// One creation (a†_mode) or annihilation (a_mode) operator.
struct LadderOp {
  int mode = 0;
  bool creation = false;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

/// coefficient * (ordered product of ladder operators, leftmost acts last).
struct FermionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> product;
};

/// A sum of ladder-operator products over spin-orbital modes.
///
/// Products are kept exactly as written; `simplify` merges identical products
/// but does not normal-order.
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::vector<FermionTerm> terms) : terms_(std::move(terms)) {}

  static FermionOperator identity(Complex coefficient = 1.0);
  static FermionOperator term(Complex coefficient, std::vector<LadderOp> product);
  static FermionOperator creation(int mode) { return term(1.0, {{mode, true}}); }
  static FermionOperator annihilation(int mode) { return term(1.0, {{mode, false}}); }

  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// One past the largest mode index referenced (0 for a pure scalar).
  int mode_count() const noexcept;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(Complex scalar);

  FermionOperator adjoint() const;

  std::string to_string() const;

 private:
  std::vector<FermionTerm> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator-(FermionOperator a, const FermionOperator& b);
FermionOperator operator*(Complex scalar, FermionOperator a);
FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

/// Merges identical products and drops |coefficient| < drop_tol. Terms come out
/// sorted by product so equal operators compare equal term by term.
FermionOperator simplify(const FermionOperator& op, double drop_tol = 1e-12);

/// Σ_j a†_j a_j over `n_modes` modes.
FermionOperator number_operator(int n_modes);

}  // namespace kadapt
