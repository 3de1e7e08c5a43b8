// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kadapt/pauli.hpp"

namespace kadapt::detail {

struct StringKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  friend bool operator==(const StringKey&, const StringKey&) = default;
  friend auto operator<=>(const StringKey&, const StringKey&) = default;
};

struct StringKeyHash {
  std::size_t operator()(const StringKey& k) const noexcept {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ULL;
    h ^= k.z + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Sums coefficients per Pauli string and emits them in canonical order.
class StringAccumulator {
 public:
  void add(const PauliTerm& t) { map_[StringKey{t.x_mask, t.z_mask}] += t.coefficient; }

  PauliSum to_sum(int n_qubits, double drop_tol) const {
    std::vector<std::pair<StringKey, Complex>> items(map_.begin(), map_.end());
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PauliTerm> terms;
    terms.reserve(items.size());
    for (const auto& [k, c] : items) {
      if (std::abs(c) < drop_tol) continue;
      terms.push_back(PauliTerm{n_qubits, k.x, k.z, c});
    }
    return PauliSum(n_qubits, std::move(terms));
  }

 private:
  std::unordered_map<StringKey, Complex, StringKeyHash> map_;
};

}  // namespace kadapt::detail
