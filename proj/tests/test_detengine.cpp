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

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "slocc/slocc.hpp"

using namespace slocc;
using slocc::testing::laplace_det;
using slocc::testing::random_exact_matrix;
using slocc::testing::to_float;

TEST_CASE("cofactor expansion reproduces hand-computed determinants") {
  // The oracle itself is checked first, on matrices small enough to do by eye.
  SquareMatrix<GaussianRational> m2(2);
  m2.at(0, 0) = GaussianRational(3);
  m2.at(0, 1) = GaussianRational(7);
  m2.at(1, 0) = GaussianRational(1);
  m2.at(1, 1) = GaussianRational(4);
  CHECK(laplace_det(m2) == GaussianRational(5));

  SquareMatrix<GaussianRational> m3(3);
  const int vals[3][3] = {{2, 0, 1}, {3, 0, 0}, {5, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m3.at(r, c) = GaussianRational(vals[r][c]);
  CHECK(laplace_det(m3) == GaussianRational(3));

  SquareMatrix<GaussianRational> mi(2);
  mi.at(0, 0) = GaussianRational::from_ints(0, 1);
  mi.at(1, 1) = GaussianRational::from_ints(0, 1);
  CHECK(laplace_det(mi) == GaussianRational(-1));
}

TEST_CASE("coefficient matrices follow the row and column bit conventions") {
  auto symbolic = [](int n) {
    // amp(i) = i + 1 keeps every entry distinct and nonzero.
    PureState<GaussianRational> s(n);
    for (std::uint64_t i = 0; i < s.dim(); ++i)
      s.amp(i) = GaussianRational(static_cast<long>(i) + 1);
    return s;
  };

  const auto parts4 = enumerate_partitions(4);
  const auto s4 = symbolic(4);
  const auto m1 = build_matrix(s4, parts4[0]).m;
  for (int c = 0; c < 4; ++c) {
    CHECK(m1.at(0, c) == GaussianRational(c + 1));
    CHECK(m1.at(3, c) == GaussianRational(12 + c + 1));
  }
  // Rows {2,3}: first row of the second partition reads a0 a1 a8 a9.
  const auto m2 = build_matrix(s4, parts4[1]).m;
  CHECK(m2.at(0, 0) == GaussianRational(0 + 1));
  CHECK(m2.at(0, 1) == GaussianRational(1 + 1));
  CHECK(m2.at(0, 2) == GaussianRational(8 + 1));
  CHECK(m2.at(0, 3) == GaussianRational(9 + 1));

  // n=6, partition rows {2,3,4}: index 32 = 100000 lands at row 0, column 4.
  const auto parts6 = enumerate_partitions(6);
  const auto s6 = symbolic(6);
  const auto m6 = build_matrix(s6, parts6[1]).m;
  CHECK(m6.at(0, 4) == GaussianRational(32 + 1));

  CHECK_THROWS_AS(build_matrix(s4, parts6[0]), DomainError);
  CHECK(build_matrix(s6, parts6[4]).partition_index == 5);
}

TEST_CASE("exact elimination agrees with cofactor expansion") {
  for (int d : {1, 2, 3, 4, 6, 8}) {
    for (std::uint64_t seed = 0; seed < (d >= 8 ? 2u : 6u); ++seed) {
      const auto m = random_exact_matrix(d, 1000 * d + seed);
      CHECK(det_exact(m).value == laplace_det(m));
    }
  }
}

TEST_CASE("exact elimination handles zero pivots and singular inputs") {
  // First column entirely zero.
  SquareMatrix<GaussianRational> z(3);
  z.at(0, 1) = GaussianRational(1);
  z.at(1, 2) = GaussianRational(2);
  const auto dz = det_exact(z);
  CHECK(dz.zero_verdict);
  CHECK(dz.value == GaussianRational());

  // Leading zero pivot with nonzero determinant forces a row swap.
  SquareMatrix<GaussianRational> sw(2);
  sw.at(0, 1) = GaussianRational(1);
  sw.at(1, 0) = GaussianRational(1);
  CHECK(det_exact(sw).value == GaussianRational(-1));

  // Repeated rows.
  auto rep = random_exact_matrix(4, 808);
  for (int c = 0; c < 4; ++c) rep.at(3, c) = rep.at(1, c);
  CHECK(det_exact(rep).zero_verdict);
  CHECK(laplace_det(rep) == GaussianRational());
}

TEST_CASE("float elimination tracks the exact value on integer matrices") {
  for (int d : {2, 4, 8, 16}) {
    const auto m = random_exact_matrix(d, 77 + d);
    const auto exact = det_exact(m).value.to_complex();
    const auto approx = det_float(to_float(m)).value;
    CHECK(std::abs(approx - exact) <= 1e-8 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("row swaps flip the sign in both engines") {
  auto m = random_exact_matrix(4, 5);
  const auto before = det_exact(m).value;
  m.swap_rows(1, 3);
  CHECK(det_exact(m).value == -before);

  auto f = to_float(random_exact_matrix(5, 6));
  const auto fb = det_float(f).value;
  f.swap_rows(0, 2);
  CHECK(std::abs(det_float(f).value + fb) <= 1e-9 * std::abs(fb));
}

TEST_CASE("transposition leaves determinants unchanged") {
  const auto m = random_exact_matrix(6, 9);
  CHECK(det_exact(m).value == det_exact(m.transposed()).value);
}

TEST_CASE("scaling a d-dimensional matrix scales the determinant by lambda^d") {
  const auto m = random_exact_matrix(4, 21);
  const GaussianRational lambda = GaussianRational::ratio(-3, 2);
  SquareMatrix<GaussianRational> scaled(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) scaled.at(r, c) = m.at(r, c) * lambda;
  CHECK(det_exact(scaled).value ==
        det_exact(m).value * pow_int(lambda, std::uint64_t(4)));
}

TEST_CASE("float zero verdict scales with the Hadamard bound") {
  // Rank-1 outer product: determinant exactly representable as 0 is not
  // guaranteed after elimination, but the verdict must still be zero.
  SquareMatrix<Complex> outer(4);
  const double xs[4] = {0.3, -1.2, 0.7, 2.1};
  const double ys[4] = {1.1, 0.4, -0.6, 0.9};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) outer.at(r, c) = Complex(xs[r] * ys[c], 0.0);
  const auto v = det_float(outer);
  CHECK(v.zero_verdict);
  CHECK(v.zero_bound > 0.0);

  // The all-zero matrix has a vanishing bound and a zero verdict.
  const auto vz = det_float(SquareMatrix<Complex>(3));
  CHECK(vz.zero_verdict);
  CHECK(vz.zero_bound == 0.0);

  // A well-conditioned diagonal stays nonzero even with a generous factor.
  SquareMatrix<Complex> diag(3);
  for (int r = 0; r < 3; ++r) diag.at(r, r) = Complex(2.0, 0.0);
  CHECK_FALSE(det_float(diag, 1e-6).zero_verdict);
  // An extreme threshold factor flips the verdict, not the value.
  const auto vd = det_float(diag, 10.0);
  CHECK(vd.zero_verdict);
  CHECK(std::abs(vd.value - Complex(8.0, 0.0)) < 1e-12);
}

TEST_CASE("non-finite entries are rejected") {
  SquareMatrix<Complex> m(2);
  m.at(0, 0) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  CHECK_THROWS_AS(det_float(m), DomainError);
  m.at(0, 0) = Complex(0.0, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(det_float(m), DomainError);
}

TEST_CASE("matrix access is bounds-checked") {
  SquareMatrix<GaussianRational> m(2);
  CHECK_THROWS_AS(m.at(2, 0), DomainError);
  CHECK_THROWS_AS(m.at(0, -1), DomainError);
  CHECK_THROWS_AS(SquareMatrix<GaussianRational>(0), DomainError);
}
