// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/fci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "kadapt/error.hpp"

namespace kadapt {
namespace {

constexpr int kMaxFciQubits = 24;
constexpr std::size_t kDenseLimit = 4096;

constexpr std::uint64_t kUpMask = 0x5555555555555555ULL;  // even qubits: spin up

Complex i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct Term {
  std::uint64_t x;
  std::uint64_t z;
  Complex c;  // coefficient * i^{|x&z|}
};

// Pauli sum restricted to a sector basis, applied without forming a matrix.
class SectorOperator {
 public:
  SectorOperator(const PauliSum& h, std::vector<std::uint64_t> basis)
      : basis_(std::move(basis)), index_(std::size_t{1} << h.n_qubits(), -1) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<std::int64_t>(i);
    for (const auto& t : h.terms()) {
      terms_.push_back({t.x_mask, t.z_mask, t.coefficient * i_pow(std::popcount(t.x_mask & t.z_mask))});
    }
  }

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const noexcept { return basis_; }

  template <typename Sink>
  void for_each_element(std::size_t col, Sink&& sink) const {
    const std::uint64_t b = basis_[col];
    for (const auto& t : terms_) {
      const std::int64_t row = index_[b ^ t.x];
      if (row < 0) continue;
      const double sign = (std::popcount(b & t.z) & 1) ? -1.0 : 1.0;
      sink(static_cast<std::size_t>(row), sign * t.c);
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
    for (std::size_t j = 0; j < dim(); ++j) {
      const Complex vj = v(static_cast<Eigen::Index>(j));
      if (vj == Complex{0.0, 0.0}) continue;
      for_each_element(j, [&](std::size_t row, Complex h) { out(static_cast<Eigen::Index>(row)) += h * vj; });
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> basis_;
  std::vector<std::int64_t> index_;
  std::vector<Term> terms_;
};

std::vector<double> dense_solve(const SectorOperator& op, int n_eig) {
  const auto d = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < op.dim(); ++j) {
    op.for_each_element(j, [&](std::size_t row, Complex h) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) += h;
    });
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ComputationError("dense eigensolver failed");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(n_eig, d); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

// Reference determinant of the sector: lowest up and down orbitals filled.
std::uint64_t reference_state(const std::vector<std::uint64_t>& basis, int n_qubits,
                              const std::optional<Sector>& sector) {
  if (!sector) return basis.front();
  const int n_up = (sector->n_electrons + sector->ms2) / 2;
  const int n_down = sector->n_electrons - n_up;
  std::uint64_t b = 0;
  for (int i = 0; i < n_up; ++i) b |= std::uint64_t{1} << (2 * i);
  for (int i = 0; i < n_down; ++i) b |= std::uint64_t{1} << (2 * i + 1);
  return b < (std::uint64_t{1} << n_qubits) ? b : basis.front();
}

std::vector<double> lanczos_solve(const SectorOperator& op, std::uint64_t start_state, int n_eig,
                                  std::uint64_t seed) {
  const auto d = static_cast<Eigen::Index>(op.dim());
  const int max_steps = static_cast<int>(std::min<Eigen::Index>(d, 600));

  // Deterministic start: the reference determinant plus a small seeded
  // admixture of every sector state, so no symmetry block is missed.
  Eigen::VectorXcd v(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = 1e-3 * u(rng);
  const auto it = std::lower_bound(op.basis().begin(), op.basis().end(), start_state);
  if (it != op.basis().end() && *it == start_state) v(it - op.basis().begin()) += 1.0;
  v.normalize();

  std::vector<Eigen::VectorXcd> q{v};
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> ritz;
  for (int m = 0; m < max_steps; ++m) {
    Eigen::VectorXcd w = op.apply(q.back());
    const double a = q.back().dot(w).real();  // dot conjugates the left side
    alpha.push_back(a);
    // Full reorthogonalisation, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qi : q) w -= qi.dot(w) * qi;
    }
    const double b = w.norm();

    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
    Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const int want = static_cast<int>(std::min<Eigen::Index>(n_eig, k));
    ritz.assign(es.eigenvalues().data(), es.eigenvalues().data() + want);
    bool converged = k >= n_eig;
    for (int i = 0; i < want && converged; ++i) {
      converged = std::abs(b * es.eigenvectors()(k - 1, i)) < 1e-11;
    }
    if (converged || b < 1e-12 || k == d) break;
    beta.push_back(b);
    q.push_back(w / b);
  }
  return ritz;
}

}  // namespace

std::vector<std::uint64_t> sector_basis(int n_qubits, const std::optional<Sector>& sector) {
  if (n_qubits < 0 || n_qubits > kMaxFciQubits) {
    throw DimensionError("exact diagonalisation is limited to " + std::to_string(kMaxFciQubits) +
                         " qubits");
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (sector) {
      if (std::popcount(b) != sector->n_electrons) continue;
      const int up = std::popcount(b & kUpMask);
      const int down = sector->n_electrons - up;
      if (up - down != sector->ms2) continue;
    }
    out.push_back(b);
  }
  return out;
}

std::vector<double> lowest_eigenvalues(const SpectrumRequest& req) {
  const PauliSum h = simplify(req.hamiltonian);
  if (!h.is_hermitian(1e-10)) throw StructureError("Hamiltonian is not Hermitian");
  if (req.n_eigenvalues < 1) throw StructureError("n_eigenvalues must be >= 1");
  auto basis = sector_basis(h.n_qubits(), req.sector);
  if (basis.empty()) throw StructureError("requested sector is empty");
  const std::uint64_t start = reference_state(basis, h.n_qubits(), req.sector);
  const SectorOperator op(h, std::move(basis));

  SolverKind kind = req.solver;
  if (kind == SolverKind::automatic) {
    kind = op.dim() <= kDenseLimit ? SolverKind::dense : SolverKind::lanczos;
  }
  return kind == SolverKind::dense ? dense_solve(op, req.n_eigenvalues)
                                   : lanczos_solve(op, start, req.n_eigenvalues, req.seed);
}

double exact_ground_energy(const SpectrumRequest& req) { return lowest_eigenvalues(req).front(); }

double exact_ground_energy(const PauliSum& h, Sector sector, SolverKind solver) {
  return exact_ground_energy(SpectrumRequest{h, sector, 1, solver});
}

}  // namespace kadapt
