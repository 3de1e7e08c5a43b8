// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "kadapt/error.hpp"
#include "detail/string_key.hpp"

namespace kadapt {
namespace {

void check_qubits(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw DimensionError("mismatched qubit counts: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

// i^k for k mod 4.
Complex i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

PauliTerm PauliTerm::identity(int n_qubits, Complex coefficient) {
  check_qubits(n_qubits);
  return PauliTerm{n_qubits, 0, 0, coefficient};
}

PauliTerm PauliTerm::from_label(int n_qubits, const std::string& label, Complex coefficient) {
  check_qubits(n_qubits);
  PauliTerm t{n_qubits, 0, 0, coefficient};
  std::istringstream in(label);
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw StructureError("bad Pauli token '" + tok + "'");
    int q = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw StructureError("bad Pauli token '" + tok + "'");
    }
    if (q < 0 || q >= n_qubits) {
      throw DimensionError("qubit " + std::to_string(q) + " outside register of " +
                           std::to_string(n_qubits));
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if ((t.x_mask | t.z_mask) & bit) throw StructureError("qubit " + std::to_string(q) + " repeated in label");
    switch (tok[0]) {
      case 'X': t.x_mask |= bit; break;
      case 'Z': t.z_mask |= bit; break;
      case 'Y': t.x_mask |= bit; t.z_mask |= bit; break;
      default: throw StructureError("bad Pauli token '" + tok + "'");
    }
  }
  return t;
}

int PauliTerm::weight() const noexcept { return std::popcount(support()); }

std::string PauliTerm::label() const {
  std::string out;
  for (int q = 0; q < n_qubits; ++q) {
    const bool x = (x_mask >> q) & 1U;
    const bool z = (z_mask >> q) & 1U;
    if (!x && !z) continue;
    if (!out.empty()) out += ' ';
    out += x ? (z ? 'Y' : 'X') : 'Z';
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

std::string PauliTerm::to_string() const {
  std::string c = "(" + shortest(coefficient.real());
  const double im = coefficient.imag() == 0.0 ? 0.0 : coefficient.imag();
  if (im >= 0.0 && !std::signbit(im)) c += '+';
  c += shortest(im) + "j)";
  return c + " " + label();
}

bool commutes(const PauliTerm& a, const PauliTerm& b) noexcept {
  return std::popcount((a.x_mask & b.z_mask) ^ (a.z_mask & b.x_mask)) % 2 == 0;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  check_same(a.n_qubits, b.n_qubits);
  // With Y = i X Z per qubit, sigma(x,z) = i^{xz} X^x Z^z. Moving Z^{z_a} past
  // X^{x_b} costs (-1)^{z_a x_b}, and the product's own i^{xz} is divided out.
  const std::uint64_t x = a.x_mask ^ b.x_mask;
  const std::uint64_t z = a.z_mask ^ b.z_mask;
  const int k = std::popcount(a.x_mask & a.z_mask) + std::popcount(b.x_mask & b.z_mask) +
                2 * std::popcount(a.z_mask & b.x_mask) - std::popcount(x & z);
  return PauliTerm{a.n_qubits, x, z, a.coefficient * b.coefficient * i_pow(k)};
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) { check_qubits(n_qubits); }

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  check_qubits(n_qubits);
  for (const auto& t : terms_) check_same(n_qubits_, t.n_qubits);
}

void PauliSum::add(const PauliTerm& term) {
  check_same(n_qubits_, term.n_qubits);
  terms_.push_back(term);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same(n_qubits_, other.n_qubits_);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same(n_qubits_, other.n_qubits_);
  for (auto t : other.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(t);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  const auto s = simplify(*this, 0.0);
  return std::all_of(s.terms_.begin(), s.terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coefficient.imag()) <= tol; });
}

bool PauliSum::is_anti_hermitian(double tol) const {
  const auto s = simplify(*this, 0.0);
  return std::all_of(s.terms_.begin(), s.terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coefficient.real()) <= tol; });
}

Complex PauliSum::coefficient_of(std::uint64_t x_mask, std::uint64_t z_mask) const {
  Complex c{0.0, 0.0};
  for (const auto& t : terms_) {
    if (t.x_mask == x_mask && t.z_mask == z_mask) c += t.coefficient;
  }
  return c;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " +\n";
    out += t.to_string();
  }
  return out;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (!s.same_string(t) || s.coefficient != t.coefficient) return false;
  }
  return true;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(Complex scalar, PauliSum a) { return a *= scalar; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same(a.n_qubits(), b.n_qubits());
  detail::StringAccumulator acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) acc.add(multiply(s, t));
  }
  return acc.to_sum(a.n_qubits(), kDefaultDropTolerance);
}

PauliSum simplify(const PauliSum& s, double drop_tol) {
  detail::StringAccumulator acc;
  for (const auto& t : s.terms()) acc.add(t);
  return acc.to_sum(s.n_qubits(), drop_tol);
}

PauliSum commutator(const PauliSum& a, const PauliSum& b, double drop_tol) {
  check_same(a.n_qubits(), b.n_qubits());
  detail::StringAccumulator acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      if (commutes(s, t)) continue;
      auto p = multiply(s, t);
      p.coefficient *= 2.0;
      acc.add(p);
    }
  }
  return acc.to_sum(a.n_qubits(), drop_tol);
}

}  // namespace kadapt
