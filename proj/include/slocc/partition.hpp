// Copyright 2026 The sloccdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/permutation.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Balanced bit partition of the index bits {1, ..., n}, n even, h = n/2.
/// Starting from rows {1..h} / columns {h+1..n}, the set R of moved_out bits
/// (subset of {1..h-1}) swaps places with the equally sized set T of moved_in
/// bits (subset of {h+1..n}).  Bit h always stays on the row side, which
/// picks one representative per transpose-related pair.
struct BitPartition {
    int n = 0;
    int k = 0;
    std::vector<int> moved_out;
    std::vector<int> moved_in;
    std::vector<int> row_bits;
    std::vector<int> col_bits;
    int canonical_index = 0;
};

/// Number of distinct invariants: binomial(n-1, n/2-1).
inline std::uint64_t partition_count(int n) {
  check_qubit_count(n, kHardMaxQubits);
  return detail::binomial(n - 1, n / 2 - 1);
}

namespace detail {

inline std::vector<std::vector<int>> combinations(const std::vector<int> &universe, int k) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(universe.size());
  if (k < 0 || k > m) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      combo[static_cast<std::size_t>(i)] = universe[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    out.push_back(std::move(combo));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

} // namespace detail

/// All partitions in canonical order: k ascending, then R in lexicographic
/// order, then T in lexicographic order.  canonical_index is the 1-based
/// position in this list.
inline std::vector<BitPartition> enumerate_partitions(int n) {
  check_qubit_count(n, kHardMaxQubits);
  const int h = n / 2;
  std::vector<int> r_universe, t_universe;
  for (int b = 1; b <= h - 1; ++b) r_universe.push_back(b);
  for (int b = h + 1; b <= n; ++b) t_universe.push_back(b);

  std::vector<BitPartition> out;
  for (int k = 0; k <= h - 1; ++k) {
    for (const auto &r : detail::combinations(r_universe, k)) {
      for (const auto &t : detail::combinations(t_universe, k)) {
        BitPartition p;
        p.n = n;
        p.k = k;
        p.moved_out = r;
        p.moved_in = t;
        for (int b = 1; b <= h; ++b)
          if (!std::binary_search(r.begin(), r.end(), b)) p.row_bits.push_back(b);
        p.row_bits.insert(p.row_bits.end(), t.begin(), t.end());
        std::sort(p.row_bits.begin(), p.row_bits.end());
        for (int b = 1; b <= n; ++b)
          if (!std::binary_search(p.row_bits.begin(), p.row_bits.end(), b))
            p.col_bits.push_back(b);
        p.canonical_index = static_cast<int>(out.size()) + 1;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

/// The defining transpositions (r_1, t_1) ... (r_k, t_k), R and T paired in
/// ascending order.  The factors are disjoint, so this is also a product in
/// any application order.
inline std::vector<std::pair<int, int>> sigma_pairs(const BitPartition &p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p.k; ++i)
    pairs.emplace_back(p.moved_out[static_cast<std::size_t>(i)],
                       p.moved_in[static_cast<std::size_t>(i)]);
  return pairs;
}

/// Normal form: each (r_i, t_i) contributes the factors (1, r_i)(1, t_i) in
/// sequence, with the degenerate factor (1, 1) dropped.  Factors multiply
/// right to left (rightmost applied first); the product induces the same row
/// set as the pair form, though not the same permutation.
inline std::vector<std::pair<int, int>> sigma_normal_form(const BitPartition &p) {
  std::vector<std::pair<int, int>> factors;
  for (const auto &[r, t] : sigma_pairs(p)) {
    if (r != 1) factors.emplace_back(1, r);
    factors.emplace_back(1, t);
  }
  return factors;
}

/// Rendering of the normal form, e.g. "I", "(1,4)", "(1,4)(1,2)(1,5)".
inline std::string sigma_string(const BitPartition &p) {
  const auto factors = sigma_normal_form(p);
  if (factors.empty()) return "I";
  std::string out;
  for (const auto &[a, b] : factors)
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

/// The pair form as a permutation of {1..n}.
inline QubitPermutation sigma_pair_permutation(const BitPartition &p) {
  QubitPermutation acc = QubitPermutation::identity(p.n);
  for (const auto &[r, t] : sigma_pairs(p))
    acc = acc.after(QubitPermutation::transposition(p.n, r, t));
  return acc;
}

/// The normal form as a permutation of {1..n}: f_1 o f_2 o ... o f_m for the
/// printed factor sequence f_1 f_2 ... f_m.
inline QubitPermutation normal_form_permutation(const BitPartition &p) {
  QubitPermutation acc = QubitPermutation::identity(p.n);
  for (const auto &[a, b] : sigma_normal_form(p))
    acc = acc.after(QubitPermutation::transposition(p.n, a, b));
  return acc;
}

/// Image of the base row set {1..h} under pi, sorted.
inline std::vector<int> image_of_base(const QubitPermutation &pi, int h) {
  std::vector<int> out;
  for (int b = 1; b <= h; ++b) out.push_back(pi(b));
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical index of the partition whose row side is the given h-subset of
/// {1..n}, taking the complement when the subset does not contain bit h (the
/// two sides of a partition carry the same invariant up to transpose).
inline int partition_index_of_row_set(const std::vector<BitPartition> &all,
                                      std::vector<int> rows) {
  if (all.empty()) throw DomainError("empty partition list");
  const int n = all.front().n;
  const int h = n / 2;
  std::sort(rows.begin(), rows.end());
  if (static_cast<int>(rows.size()) != h) throw DomainError("row set must have n/2 bits");
  if (!std::binary_search(rows.begin(), rows.end(), h)) {
    std::vector<int> complement;
    for (int b = 1; b <= n; ++b)
      if (!std::binary_search(rows.begin(), rows.end(), b)) complement.push_back(b);
    rows = std::move(complement);
  }
  for (const auto &p : all)
    if (p.row_bits == rows) return p.canonical_index;
  throw DomainError("row set matches no canonical partition");
}

} // namespace slocc
