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

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "reference_grids.hpp"
#include "slocc/slocc.hpp"

using namespace slocc;
using namespace gridref;

namespace {

// Canonical index grid of a partition: cell (r, c) holds the basis index
// whose row_bits spell r and col_bits spell c.
std::vector<std::vector<int>> canonical_index_grid(const BitPartition &p) {
  const int d = 1 << (p.n / 2);
  std::vector<std::vector<int>> g(d, std::vector<int>(d, -1));
  for (int idx = 0; idx < (1 << p.n); ++idx) {
    int r = 0, c = 0;
    for (int b : p.row_bits) r = (r << 1) | bit_of(idx, p.n, b);
    for (int b : p.col_bits) c = (c << 1) | bit_of(idx, p.n, b);
    g[r][c] = idx;
  }
  return g;
}

template <int D>
SquareMatrix<GaussianRational> matrix_from_grid(const int (&grid)[D][D],
                                                const PureState<GaussianRational> &s) {
  SquareMatrix<GaussianRational> m(D);
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) m.at(r, c) = s.amp(grid[r][c]);
  return m;
}

} // namespace

TEST_CASE("the two-qubit grid matches the canonical convention cell by cell") {
  const auto parts = enumerate_partitions(2);
  const auto g = canonical_index_grid(parts[0]);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(g[r][c] == kGrid2[r][c]);
}

TEST_CASE("all three four-qubit grids match the canonical convention cell by cell") {
  const auto parts = enumerate_partitions(4);
  for (int i = 0; i < 3; ++i) {
    const auto g = canonical_index_grid(parts[i]);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        INFO("grid " << i + 1 << " cell (" << r << "," << c << ")");
        CHECK(g[r][c] == kGrid4[i][r][c]);
      }
  }
}

TEST_CASE("all ten six-qubit grids match after the documented normalization") {
  const auto parts = enumerate_partitions(6);
  for (int i = 0; i < 10; ++i) {
    const auto g = canonical_index_grid(parts[i]);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        int expect = -1;
        switch (kGrid6Orientation[i]) {
          case Orientation::Canonical:
            expect = g[r][c];
            break;
          case Orientation::Transposed:
            expect = g[c][r];
            break;
          case Orientation::RowPermuted:
            expect = g[kGrid6RowPerm[r]][c];
            break;
        }
        INFO("grid " << i + 1 << " cell (" << r << "," << c << ")");
        CHECK(kGrid6[i][r][c] == expect);
      }
  }
}

TEST_CASE("reference grids and canonical matrices give identical determinants") {
  // Transposition and even row reordering both preserve the determinant, so
  // every reference grid must reproduce the canonical value exactly.
  const auto s = random_state<GaussianRational>(6, 314159);
  const auto parts = enumerate_partitions(6);
  for (int i = 0; i < 10; ++i) {
    const auto reference = matrix_from_grid(kGrid6[i], s);
    const auto canonical = build_matrix(s, parts[i]).m;
    CHECK(det_exact(reference).value == det_exact(canonical).value);
  }

  const auto s4 = random_state<GaussianRational>(4, 2718);
  const auto parts4 = enumerate_partitions(4);
  for (int i = 0; i < 3; ++i) {
    const auto reference = matrix_from_grid(kGrid4[i], s4);
    const auto canonical = build_matrix(s4, parts4[i]).m;
    CHECK(det_exact(reference).value == det_exact(canonical).value);
  }
}

TEST_CASE("the six-qubit row reordering is even") {
  int inversions = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (kGrid6RowPerm[a] > kGrid6RowPerm[b]) ++inversions;
  CHECK(inversions % 2 == 0);
}
