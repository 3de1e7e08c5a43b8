// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "kadapt/fermion.hpp"

namespace kadapt {

/// Spin-orbital index of spatial orbital `p` with spin `down` (interleaved:
/// 2p is spin-up, 2p+1 spin-down).
constexpr int spin_orbital(int p, bool down) noexcept { return 2 * p + (down ? 1 : 0); }
constexpr bool is_spin_down(int spin_orbital_index) noexcept { return spin_orbital_index % 2 == 1; }

/// Real restricted one- and two-electron integrals over spatial orbitals.
///
/// Two-body values use chemists' notation (pq|rs). Setters fill every
/// symmetry-equivalent slot, so lookups never depend on which permutation a
/// file happened to list.
class MolecularIntegrals {
 public:
  MolecularIntegrals() = default;
  MolecularIntegrals(int n_spatial_orbitals, int n_electrons, int ms2 = 0);

  int n_spatial_orbitals() const noexcept { return norb_; }
  int n_spin_orbitals() const noexcept { return 2 * norb_; }
  int n_electrons() const noexcept { return nelec_; }
  int ms2() const noexcept { return ms2_; }

  double core_energy() const noexcept { return core_; }
  void set_core_energy(double e) noexcept { core_ = e; }

  /// h_pq, 0-based spatial indices.
  double one_body(int p, int q) const { return h1_[index2(p, q)]; }
  void set_one_body(int p, int q, double value);

  /// (pq|rs), 0-based spatial indices.
  double two_body(int p, int q, int r, int s) const { return h2_[index4(p, q, r, s)]; }
  void set_two_body(int p, int q, int r, int s, double value);

 private:
  std::size_t index2(int p, int q) const;
  std::size_t index4(int p, int q, int r, int s) const;

  int norb_ = 0;
  int nelec_ = 0;
  int ms2_ = 0;
  double core_ = 0.0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Reads an FCIDUMP stream (namelist header, then `value i j k l` lines with
/// 1-based indices). Throws ParseError naming the offending line.
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_file(const std::filesystem::path& path);

/// Writes the symmetry-unique entries at full double precision.
void write_fcidump(std::ostream& out, const MolecularIntegrals& m, double tol = 0.0);

/// Σ h_pq a†_p a_q + ½ Σ h_pqrs a†_p a†_q a_r a_s + E_core over spin orbitals.
FermionOperator build_fermionic_hamiltonian(const MolecularIntegrals& m);

}  // namespace kadapt
