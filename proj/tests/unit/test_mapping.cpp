// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "dense.hpp"
#include "kadapt/error.hpp"
#include "kadapt/mapping.hpp"
#include "kadapt/pool.hpp"

namespace kadapt {
namespace {

using testing::Matrix;
using testing::annihilation_matrix;
using testing::expm;
using testing::fermion_matrix;
using testing::pauli_matrix;

class LadderImages : public ::testing::TestWithParam<int> {};

TEST_P(LadderImages, MatchOccupationBasis) {
  const int n = GetParam();
  for (int j = 0; j < n; ++j) {
    const Matrix a = annihilation_matrix(j, n);
    EXPECT_LT((pauli_matrix(jordan_wigner(LadderOp{j, false}, n)) - a).norm(), 1e-12);
    EXPECT_LT((pauli_matrix(jordan_wigner(LadderOp{j, true}, n)) - a.adjoint()).norm(), 1e-12);
  }
}

TEST_P(LadderImages, CanonicalAnticommutation) {
  const int n = GetParam();
  const auto d = Eigen::Index{1} << n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix ai = pauli_matrix(jordan_wigner(LadderOp{i, false}, n));
      const Matrix aj_dag = pauli_matrix(jordan_wigner(LadderOp{j, true}, n));
      const Matrix aj = pauli_matrix(jordan_wigner(LadderOp{j, false}, n));
      const Matrix expect = i == j ? Matrix(Matrix::Identity(d, d)) : Matrix(Matrix::Zero(d, d));
      EXPECT_LT((ai * aj_dag + aj_dag * ai - expect).norm(), 1e-12);
      EXPECT_LT((ai * aj + aj * ai).norm(), 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Registers, LadderImages, ::testing::Values(1, 2, 4, 6));

TEST(JordanWigner, ParityStringSitsBelowTheMode) {
  const auto img = jordan_wigner(LadderOp{3, false}, 5);
  for (const auto& t : img.terms()) {
    EXPECT_EQ(t.z_mask & 0b00111u, 0b00111u);
    EXPECT_EQ(t.x_mask, 0b01000u);
  }
}

TEST(JordanWigner, OperatorImagesMatchDense) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    FermionOperator f;
    for (int k = 0; k < 3; ++k) {
      std::vector<LadderOp> prod;
      for (int m = 0; m < 4; ++m) prod.push_back({static_cast<int>(rng() % 5), (rng() & 1) != 0});
      f += FermionOperator::term({g(rng), g(rng)}, prod);
    }
    EXPECT_LT((pauli_matrix(jordan_wigner(f, 5)) - fermion_matrix(f, 5)).norm(), 1e-12);
  }
}

TEST(JordanWigner, ModeOutsideRegisterThrows) {
  EXPECT_THROW(jordan_wigner(FermionOperator::creation(4), 4), DimensionError);
}

struct Excitation {
  std::array<int, 2> occ;
  std::array<int, 2> virt;
  int n;
};

class DoubleExcitations : public ::testing::TestWithParam<Excitation> {};

TEST_P(DoubleExcitations, ImageMatchesDenseGenerator) {
  const auto [occ, virt, n] = GetParam();
  const auto op = make_double_excitation(occ, virt, n);
  const Matrix g = fermion_matrix(op.generator, n);
  EXPECT_LT((pauli_matrix(op.qubit_image) - g).norm(), 1e-12);
  EXPECT_LT((g + g.adjoint()).norm(), 1e-12);
  EXPECT_GT(g.norm(), 0.5);
}

TEST_P(DoubleExcitations, EightCommutingStringsOfEqualWeight) {
  const auto [occ, virt, n] = GetParam();
  const auto op = make_double_excitation(occ, virt, n);
  const auto& f = op.rotation_factors;
  ASSERT_EQ(f.factors.size(), 8u);
  EXPECT_NEAR(f.magnitude, 0.125, 1e-15);
  int positive = 0;
  for (std::size_t a = 0; a < 8; ++a) {
    positive += f.factors[a].sign > 0;
    for (std::size_t b = 0; b < 8; ++b) EXPECT_TRUE(commutes(f.factors[a].string, f.factors[b].string));
    // Odd number of Y factors on the four active qubits.
    const auto y = f.factors[a].string.x_mask & f.factors[a].string.z_mask;
    EXPECT_EQ(std::popcount(y) % 2, 1);
  }
  EXPECT_EQ(positive, 4);
}

TEST_P(DoubleExcitations, ProductOfRotationsIsTheExponential) {
  const auto [occ, virt, n] = GetParam();
  const auto op = make_double_excitation(occ, virt, n);
  const Matrix g = pauli_matrix(op.qubit_image);
  std::mt19937_64 rng(static_cast<std::uint64_t>(occ[0] * 131 + virt[1]));
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto d = Eigen::Index{1} << n;
  for (int trial = 0; trial < 3; ++trial) {
    const double theta = u(rng);
    Matrix product = Matrix::Identity(d, d);
    for (std::size_t a = 0; a < 8; ++a) {
      const Matrix p = pauli_matrix(op.rotation_factors.factors[a].string);
      product = expm(Complex{0.0, op.rotation_factors.angle(a, theta)} * p) * product;
    }
    EXPECT_LT((product - expm(theta * g)).norm(), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(
    SmallRegisters, DoubleExcitations,
    ::testing::Values(Excitation{{0, 1}, {2, 3}, 4}, Excitation{{0, 1}, {4, 5}, 6},
                      Excitation{{0, 3}, {4, 5}, 6}, Excitation{{1, 2}, {3, 5}, 6},
                      Excitation{{0, 2}, {3, 5}, 6}, Excitation{{0, 1}, {2, 5}, 6}));

// Displayed expansion for p > q > r > s:
//   + XYYY + YXYY - YYXY - YYYX - YXXX - XYXX + XXYX + XXXY
// on (p, q, r, s); the relative signs are convention independent.
TEST(DoubleExcitations, RelativeSignPatternOfTheExpansion) {
  struct Row {
    const char* ops;  // letters on p, q, r, s
    int sign;
  };
  const Row rows[] = {{"XYYY", +1}, {"YXYY", +1}, {"YYXY", -1}, {"YYYX", -1},
                      {"YXXX", -1}, {"XYXX", -1}, {"XXYX", +1}, {"XXXY", +1}};
  const auto op = make_double_excitation({0, 2}, {3, 5}, 6);
  const auto idx = op.pqrs();
  double global = 0.0;
  for (const auto& row : rows) {
    std::uint64_t x = 0;
    std::uint64_t z = op.z_string_mask();
    for (int k = 0; k < 4; ++k) {
      x |= std::uint64_t{1} << idx[static_cast<std::size_t>(k)];
      if (row.ops[k] == 'Y') z |= std::uint64_t{1} << idx[static_cast<std::size_t>(k)];
    }
    const Complex c = op.qubit_image.coefficient_of(x, z);
    ASSERT_NEAR(std::abs(c), 0.125, 1e-12) << row.ops;
    ASSERT_NEAR(c.real(), 0.0, 1e-12);
    const double s = c.imag() * row.sign;
    if (global == 0.0) global = s;
    EXPECT_NEAR(s, global, 1e-12) << row.ops;
  }
}

TEST(RotationFactors, RejectNonExcitationInput) {
  PauliSum h(2);
  h.add(PauliTerm::from_label(2, "X0 Y1", 1.0));
  EXPECT_THROW(excitation_rotation_factors(h), StructureError);
}

}  // namespace
}  // namespace kadapt
