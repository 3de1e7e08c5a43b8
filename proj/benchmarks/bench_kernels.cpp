// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "kadapt/adapt.hpp"
#include "kadapt/fixture.hpp"
#include "kadapt/pauli.hpp"
#include "kadapt/statevector.hpp"

namespace kadapt {
namespace {

const std::filesystem::path kFixtures{KADAPT_FIXTURE_DIR};

const char* fixture_name(std::int64_t id) { return id == 0 ? "lih_1.60.fcidump" : "beh2_1.30.fcidump"; }

// Loading builds every commutator, so each fixture is loaded once per process.
const MolecularProblem& problem(std::int64_t id) {
  static std::map<std::int64_t, MolecularProblem> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, load_problem(kFixtures / fixture_name(id))).first;
  return it->second;
}

// HF state rotated by the first few pool operators so every amplitude group is
// exercised rather than a single basis state.
Statevector correlated_state(const MolecularProblem& p) {
  const std::vector<std::size_t> ops{0, 1, 2, 3, 4};
  const std::vector<double> theta{0.05, -0.03, 0.02, 0.04, -0.01};
  return prepare_ansatz_state(p.hartree_fock(), p.pool, ops, theta);
}

PauliTerm random_term(int n, std::mt19937_64& rng) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  PauliTerm t;
  t.n_qubits = n;
  t.x_mask = rng() & mask;
  t.z_mask = rng() & mask;
  return t;
}

void BM_PauliMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<PauliTerm> terms;
  for (int i = 0; i < 256; ++i) terms.push_back(random_term(14, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(terms[i & 255], terms[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(BM_PauliMultiply);

void BM_PauliRotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  auto p = random_term(n, rng);
  Statevector psi = hartree_fock_state(n, 4);
  for (auto _ : state) {
    psi.apply_pauli_rotation(p, 0.01);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(psi.dimension() * sizeof(Complex)));
}
BENCHMARK(BM_PauliRotation)->Arg(12)->Arg(14)->Arg(20);

void BM_ExcitationFactors(benchmark::State& state) {
  const auto& p = problem(state.range(0));
  auto psi = p.hartree_fock();
  const auto& factors = p.pool.operators.front().rotation_factors;
  for (auto _ : state) {
    psi.apply_excitation(factors, 0.01);
    benchmark::ClobberMemory();
  }
  state.SetLabel(fixture_name(state.range(0)));
}
BENCHMARK(BM_ExcitationFactors)->Arg(0)->Arg(1);

void BM_CompiledExpectation(benchmark::State& state) {
  const auto& p = problem(state.range(0));
  const CompiledObservable h(p.hamiltonian);
  const auto psi = correlated_state(p);
  for (auto _ : state) benchmark::DoNotOptimize(h.expectation(psi));
  state.SetLabel(std::string(fixture_name(state.range(0))) + ", " +
                 std::to_string(p.hamiltonian.terms().size()) + " strings");
}
BENCHMARK(BM_CompiledExpectation)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_TermwiseExpectation(benchmark::State& state) {
  const auto& p = problem(state.range(0));
  const auto psi = correlated_state(p);
  for (auto _ : state) benchmark::DoNotOptimize(expectation(psi, p.hamiltonian));
  state.SetLabel(fixture_name(state.range(0)));
}
BENCHMARK(BM_TermwiseExpectation)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_GradientScreen(benchmark::State& state) {
  const auto& p = problem(state.range(0));
  const GradientScreen screen(p.pool);
  const auto psi = correlated_state(p);
  for (auto _ : state) benchmark::DoNotOptimize(screen.evaluate(psi));
  state.SetLabel(std::string(fixture_name(state.range(0))) + ", " + std::to_string(screen.size()) +
                 " operators, " + std::to_string(screen.unique_strings()) + " strings");
}
BENCHMARK(BM_GradientScreen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PrepareAnsatz(benchmark::State& state) {
  const auto& p = problem(1);
  const auto depth = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> ops(depth);
  std::vector<double> theta(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    ops[i] = i % p.pool.size();
    theta[i] = 0.01 * static_cast<double>(i + 1);
  }
  const auto hf = p.hartree_fock();
  for (auto _ : state) benchmark::DoNotOptimize(prepare_ansatz_state(hf, p.pool, ops, theta));
}
BENCHMARK(BM_PrepareAnsatz)->Arg(5)->Arg(25)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace kadapt

BENCHMARK_MAIN();
