// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace kadapt {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 64;
inline constexpr double kDefaultDropTolerance = 1e-12;

/// A weighted Pauli string stored as paired X/Z bitmasks.
///
/// Bit k of `x_mask`/`z_mask` describes qubit k: (0,0)=I, (1,0)=X, (0,1)=Z,
/// (1,1)=Y. The term is `coefficient * P` where P is the tensor product of the
/// single-qubit Paulis, with Y meaning the Hermitian Pauli Y (not XZ).
struct PauliTerm {
  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  Complex coefficient{1.0, 0.0};

  static PauliTerm identity(int n_qubits, Complex coefficient = 1.0);

  /// Parses a compact label such as "X0 Z1 Y3" (empty or "I" is identity).
  static PauliTerm from_label(int n_qubits, const std::string& label,
                              Complex coefficient = 1.0);

  bool is_identity() const noexcept { return (x_mask | z_mask) == 0; }
  bool same_string(const PauliTerm& other) const noexcept {
    return x_mask == other.x_mask && z_mask == other.z_mask;
  }
  /// Qubits carrying a non-identity Pauli.
  std::uint64_t support() const noexcept { return x_mask | z_mask; }
  int weight() const noexcept;

  /// Renders as `(re+imj) X0 Z1 Y3`.
  std::string to_string() const;
  /// Renders only the string part, e.g. `X0 Z1 Y3` (`I` for identity).
  std::string label() const;
};

bool commutes(const PauliTerm& a, const PauliTerm& b) noexcept;

/// Product of two Pauli terms including the i^k phase.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// A linear combination of Pauli strings on a common register.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const PauliTerm& term);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  /// Coefficient-wise conjugate (Pauli strings are Hermitian).
  PauliSum adjoint() const;

  /// Hermitian iff every coefficient is real (strings are distinct after simplify).
  bool is_hermitian(double tol = 1e-10) const;
  bool is_anti_hermitian(double tol = 1e-10) const;

  /// Coefficient of the given string, or zero when absent.
  Complex coefficient_of(std::uint64_t x_mask, std::uint64_t z_mask) const;

  std::string to_string() const;

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(Complex scalar, PauliSum a);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Merges duplicate strings, drops |coefficient| < drop_tol, and sorts terms by
/// (x_mask, z_mask) so equal sums compare equal.
PauliSum simplify(const PauliSum& s, double drop_tol = kDefaultDropTolerance);

/// ab - ba, simplified. Only anticommuting string pairs contribute (2ab each).
PauliSum commutator(const PauliSum& a, const PauliSum& b,
                    double drop_tol = kDefaultDropTolerance);

}  // namespace kadapt
