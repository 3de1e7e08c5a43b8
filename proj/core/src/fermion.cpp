// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/fermion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kadapt {

FermionOperator FermionOperator::identity(Complex coefficient) {
  return FermionOperator({FermionTerm{coefficient, {}}});
}

FermionOperator FermionOperator::term(Complex coefficient, std::vector<LadderOp> product) {
  return FermionOperator({FermionTerm{coefficient, std::move(product)}});
}

int FermionOperator::mode_count() const noexcept {
  int n = 0;
  for (const auto& t : terms_) {
    for (const auto& op : t.product) n = std::max(n, op.mode + 1);
  }
  return n;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  for (auto t : other.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(std::move(t));
  }
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    FermionTerm a{std::conj(t.coefficient), {}};
    a.product.reserve(t.product.size());
    for (auto it = t.product.rbegin(); it != t.product.rend(); ++it) {
      a.product.push_back({it->mode, !it->creation});
    }
    out.terms_.push_back(std::move(a));
  }
  return out;
}

std::string FermionOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coefficient;
    for (const auto& op : t.product) os << ' ' << op.mode << (op.creation ? "^" : "");
  }
  return os.str();
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
FermionOperator operator*(Complex scalar, FermionOperator a) { return a *= scalar; }

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  std::vector<FermionTerm> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      FermionTerm p{s.coefficient * t.coefficient, s.product};
      p.product.insert(p.product.end(), t.product.begin(), t.product.end());
      out.push_back(std::move(p));
    }
  }
  return FermionOperator(std::move(out));
}

FermionOperator simplify(const FermionOperator& op, double drop_tol) {
  std::map<std::vector<LadderOp>, Complex> merged;
  for (const auto& t : op.terms()) merged[t.product] += t.coefficient;
  std::vector<FermionTerm> terms;
  for (auto& [product, c] : merged) {
    if (std::abs(c) < drop_tol) continue;
    terms.push_back({c, product});
  }
  return FermionOperator(std::move(terms));
}

FermionOperator number_operator(int n_modes) {
  std::vector<FermionTerm> terms;
  for (int j = 0; j < n_modes; ++j) terms.push_back({1.0, {{j, true}, {j, false}}});
  return FermionOperator(std::move(terms));
}

}  // namespace kadapt
