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
#include "slocc/invariants.hpp"
#include "slocc/partition.hpp"
#include "slocc/permutation.hpp"
#include "slocc/rng.hpp"
#include "slocc/scalar.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// How the transposition (1, i) permutes the invariant set: invariant j of
/// the relabeled state equals signs[j-1] times invariant targets[j-1] of the
/// original.
struct ActionRow {
    int i = 0;
    std::vector<int> targets;
    std::vector<int> signs;
    int probes_used = 0;
};

inline bool row_bijective(const ActionRow &row) {
  std::vector<int> sorted = row.targets;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j)
    if (sorted[j] != static_cast<int>(j) + 1) return false;
  return true;
}

struct ActionTable {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<ActionRow> rows;
};

inline constexpr int kDefaultProbes = 3;
inline constexpr int kEscalatedProbes = 8;

/// Identify, for each invariant j of the relabeled state, the unique signed
/// invariant of the original it equals as a polynomial in the amplitudes.
/// Candidate (target, sign) pairs are intersected across random exact probe
/// states until all are unique; probe p uses seed mix_seed(seed, p), so a
/// larger probe budget extends the same probe sequence.  An empty candidate
/// set throws NoMatchError, a non-unique one after all probes
/// AmbiguousMatchError.
inline ActionRow transposition_action(int n, int i, int max_probes, std::uint64_t seed) {
  check_qubit_count(n, kHardMaxQubits);
  if (i < 1 || i > n) throw DomainError("transposition label out of range");
  if (max_probes < 1) throw DomainError("probe count must be positive");

  const std::size_t c = static_cast<std::size_t>(partition_count(n));
  const QubitPermutation tau = QubitPermutation::transposition(n, 1, i);

  std::vector<std::vector<std::pair<int, int>>> cands(c);
  int probes_used = 0;
  for (int p = 0; p < max_probes; ++p) {
    const auto psi = random_state<GaussianRational>(n, mix_seed(seed, static_cast<std::uint64_t>(p)));
    const auto v = all_invariants(psi);
    const auto w = all_invariants(permute_qubits(psi, tau));
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<std::pair<int, int>> here;
      for (std::size_t m = 0; m < c; ++m) {
        if (w.values[j].value == v.values[m].value) here.emplace_back(static_cast<int>(m) + 1, 1);
        if (w.values[j].value == -v.values[m].value) here.emplace_back(static_cast<int>(m) + 1, -1);
      }
      if (p == 0) {
        cands[j] = std::move(here);
      } else {
        std::vector<std::pair<int, int>> kept;
        for (const auto &cand : cands[j])
          if (std::find(here.begin(), here.end(), cand) != here.end()) kept.push_back(cand);
        cands[j] = std::move(kept);
      }
    }
    probes_used = p + 1;
    const bool settled = std::all_of(cands.begin(), cands.end(),
                                     [](const auto &s) { return s.size() == 1; });
    if (settled) break;
  }

  ActionRow row;
  row.i = i;
  row.probes_used = probes_used;
  for (std::size_t j = 0; j < c; ++j) {
    if (cands[j].empty())
      throw NoMatchError("invariant " + std::to_string(j + 1) +
                         " of the relabeled state matches no signed invariant");
    if (cands[j].size() > 1)
      throw AmbiguousMatchError("invariant " + std::to_string(j + 1) +
                                " matches more than one signed invariant");
    row.targets.push_back(cands[j].front().first);
    row.signs.push_back(cands[j].front().second);
  }
  return row;
}

/// Rows for (1, 1) through (1, n).  Each row gets an independent sub-seed;
/// an ambiguous row is retried once with an extended probe budget.  Every
/// row must come out bijective ignoring signs.
inline ActionTable completeness_table(int n, std::uint64_t seed = 0,
                                      int probes = kDefaultProbes) {
  ActionTable table;
  table.n = n;
  table.seed = seed;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t row_seed = mix_seed(seed, 1000 + static_cast<std::uint64_t>(i));
    ActionRow row;
    try {
      row = transposition_action(n, i, probes, row_seed);
    } catch (const AmbiguousMatchError &) {
      if (probes >= kEscalatedProbes) throw;
      row = transposition_action(n, i, kEscalatedProbes, row_seed);
    }
    if (!row_bijective(row))
      throw Error("action of (1," + std::to_string(i) + ") is not a bijection on invariants");
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Fixed-width text table: one row per transposition, entries D<n>^<m>, then
/// a sign block with +/- per entry.
inline std::string render_action_table(const ActionTable &table) {
  const std::size_t c = table.rows.empty() ? 0 : table.rows.front().targets.size();
  const std::string dn = "D" + std::to_string(table.n) + "^";
  const std::size_t width = dn.size() + std::to_string(c).size() + 2;

  auto pad = [width](std::string s) {
    while (s.size() < width) s += ' ';
    return s;
  };
  std::string out;
  auto emit = [&out](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };

  std::string line = pad("");
  for (std::size_t j = 1; j <= c; ++j) line += pad(dn + std::to_string(j));
  emit(std::move(line));
  for (const auto &row : table.rows) {
    line = pad("(1," + std::to_string(row.i) + ")");
    for (int m : row.targets) line += pad(dn + std::to_string(m));
    emit(std::move(line));
  }
  emit("signs");
  for (const auto &row : table.rows) {
    line = pad("(1," + std::to_string(row.i) + ")");
    for (int s : row.signs) line += pad(s >= 0 ? "+" : "-");
    emit(std::move(line));
  }
  return out;
}

} // namespace slocc
