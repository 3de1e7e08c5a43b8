// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "dense.hpp"
#include "kadapt/error.hpp"
#include "kadapt/fermion.hpp"
#include "kadapt/integrals.hpp"
#include "kadapt/pool.hpp"

namespace kadapt {
namespace {

TEST(FermionOperator, SimplifyMergesIdenticalProducts) {
  auto f = FermionOperator::term(0.5, {{1, true}, {0, false}});
  f += FermionOperator::term(0.25, {{1, true}, {0, false}});
  f -= FermionOperator::term(0.75, {{1, true}, {0, false}});
  EXPECT_TRUE(simplify(f).empty());
}

TEST(FermionOperator, AdjointReversesAndConjugates) {
  const auto f = FermionOperator::term(Complex{0.0, 2.0}, {{3, true}, {2, true}, {1, false}, {0, false}});
  const auto a = f.adjoint();
  ASSERT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.terms()[0].coefficient, Complex(0.0, -2.0));
  const std::vector<LadderOp> expect{{0, true}, {1, true}, {2, false}, {3, false}};
  EXPECT_EQ(a.terms()[0].product, expect);
  EXPECT_LT((testing::fermion_matrix(a, 4) - testing::fermion_matrix(f, 4).adjoint()).norm(), 1e-12);
}

TEST(FermionOperator, ProductConcatenates) {
  const auto f = FermionOperator::creation(2) * FermionOperator::annihilation(0);
  EXPECT_EQ(f.mode_count(), 3);
  EXPECT_LT((testing::fermion_matrix(f, 3) -
             testing::fermion_matrix(FermionOperator::creation(2), 3) *
                 testing::fermion_matrix(FermionOperator::annihilation(0), 3))
                .norm(),
            1e-12);
}

TEST(Pool, SizesOfTheBenchmarkMolecules) {
  EXPECT_EQ(build_pool(2, 4).size(), 1u);
  EXPECT_EQ(build_pool(4, 12).size(), 76u);
  EXPECT_EQ(build_pool(6, 14).size(), 180u);
  EXPECT_EQ(build_pool(4, 12).mixed_spin_count(), 64u);
  EXPECT_EQ(build_pool(4, 12).same_spin_count(), 12u);
  // The cost-formula term 180 * 25 / 5 uses the same count.
  EXPECT_EQ(build_pool(6, 14).size() * 25 / 5, 900u);
}

// All 4-tuples, filtered by: occupied pair below virtual pair (HF filling),
// and the same number of down spins before and after.
std::size_t brute_force_count(int ne, int n) {
  std::set<std::tuple<int, int, int, int>> seen;
  for (int o0 = 0; o0 < n; ++o0)
    for (int o1 = 0; o1 < n; ++o1)
      for (int v0 = 0; v0 < n; ++v0)
        for (int v1 = 0; v1 < n; ++v1) {
          if (!(o0 < o1 && v0 < v1)) continue;
          if (o1 >= ne || v0 < ne) continue;
          if (is_spin_down(o0) + is_spin_down(o1) != is_spin_down(v0) + is_spin_down(v1)) continue;
          seen.insert({o0, o1, v0, v1});
        }
  return seen.size();
}

TEST(Pool, FormulaMatchesEnumeration) {
  for (int n = 4; n <= 16; n += 2) {
    for (int ne = 2; ne < n; ne += 2) {
      const auto expect = brute_force_count(ne, n);
      EXPECT_EQ(expected_pool_size(ne, n), expect) << ne << " in " << n;
      EXPECT_EQ(build_pool(ne, n).size(), expect) << ne << " in " << n;
    }
  }
}

TEST(Pool, OddElectronCountIsUnsupported) { EXPECT_THROW(build_pool(3, 8), StructureError); }

TEST(Pool, CanonicalLabelsAndOrder) {
  const auto pool = build_pool(4, 12);
  EXPECT_EQ(pool.operators.front().label, "D[0,1->4,5]");
  for (std::size_t i = 1; i < pool.size(); ++i) {
    EXPECT_TRUE(pool.operators[i - 1].precedes(pool.operators[i]));
  }
  const auto& op = pool.operators.front();
  EXPECT_EQ(op.pqrs(), (std::array<int, 4>{5, 4, 1, 0}));
  EXPECT_EQ(op.support_mask(), 0b110011u);
  EXPECT_EQ(op.z_string_mask(), 0u);
}

TEST(Pool, ImagesConserveParticleNumberAndSpin) {
  const auto pool = build_pool(2, 8);
  const auto n = testing::pauli_matrix(jordan_wigner(number_operator(8), 8));
  FermionOperator sz;
  for (int j = 0; j < 8; ++j) {
    sz += FermionOperator::term(is_spin_down(j) ? -1.0 : 1.0, {{j, true}, {j, false}});
  }
  const auto s = testing::pauli_matrix(jordan_wigner(sz, 8));
  for (const auto& op : pool.operators) {
    const auto g = testing::pauli_matrix(op.qubit_image);
    EXPECT_LT((g * n - n * g).norm(), 1e-12) << op.label;
    EXPECT_LT((g * s - s * g).norm(), 1e-12) << op.label;
    EXPECT_TRUE(op.qubit_image.is_anti_hermitian(1e-12));
  }
}

TEST(Pool, CommutatorsAreHermitianAndIdempotent) {
  auto pool = build_pool(2, 4);
  EXPECT_FALSE(pool.commutators_ready());
  MolecularIntegrals m(2, 2);
  m.set_one_body(0, 0, -1.2);
  m.set_one_body(1, 1, -0.4);
  m.set_two_body(0, 0, 0, 0, 0.6);
  m.set_two_body(1, 1, 1, 1, 0.7);
  m.set_two_body(0, 0, 1, 1, 0.65);
  m.set_two_body(0, 1, 0, 1, 0.18);
  const auto h = jordan_wigner(build_fermionic_hamiltonian(m), 4);
  precompute_commutators(pool, h);
  ASSERT_TRUE(pool.commutators_ready());
  const auto first = *pool.operators[0].commutator_with_h;
  precompute_commutators(pool, h);
  EXPECT_TRUE(first == *pool.operators[0].commutator_with_h);
  // [P, H] with P Hermitian is anti-Hermitian.
  EXPECT_TRUE(first.is_anti_hermitian(1e-12));
}

TEST(Pool, SummaryListsEveryOperator) {
  const auto s = pool_summary(build_pool(4, 12));
  EXPECT_EQ(s.at("size").get<int>(), 76);
  EXPECT_EQ(s.at("operators").size(), 76u);
}

}  // namespace
}  // namespace kadapt
