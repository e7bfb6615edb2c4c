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

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/partition.hpp"
#include "slocc/scalar.hpp"
#include "slocc/state.hpp"

namespace slocc {

template <class S>
class SquareMatrix {
  public:
    explicit SquareMatrix(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                        scalar_traits<S>::zero()) {
      if (dim < 1) throw DomainError("matrix dimension must be positive");
    }

    int dim() const { return dim_; }

    S &at(int r, int c) { return a_[index(r, c)]; }
    const S &at(int r, int c) const { return a_[index(r, c)]; }

    void swap_rows(int a, int b) {
      for (int c = 0; c < dim_; ++c) std::swap(at(a, c), at(b, c));
    }

    SquareMatrix transposed() const {
      SquareMatrix out(dim_);
      for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(c, r) = at(r, c);
      return out;
    }

  private:
    std::size_t index(int r, int c) const {
      if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
        throw DomainError("matrix index out of range");
      return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
             static_cast<std::size_t>(c);
    }

    int dim_;
    std::vector<S> a_;
};

/// Coefficient matrix of a state under one bit partition, with provenance.
template <class S>
struct CoeffMatrix {
    SquareMatrix<S> m;
    int n = 0;
    int partition_index = 0;
    std::string state_label;
};

/// Arrange the 2^n amplitudes into a 2^(n/2) x 2^(n/2) matrix: the row index
/// reads the bits of the basis label at the partition's row_bits positions in
/// ascending position order (most significant first), the column index does
/// the same with col_bits.
template <class S>
CoeffMatrix<S> build_matrix(const PureState<S> &state, const BitPartition &p,
                            std::string label = "") {
  if (p.n != state.qubits())
    throw DomainError("partition and state disagree on qubit count");
  const int h = p.n / 2;
  CoeffMatrix<S> out{SquareMatrix<S>(1 << h), p.n, p.canonical_index, std::move(label)};
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    int r = 0, c = 0;
    for (int b : p.row_bits) r = (r << 1) | bit_of(idx, p.n, b);
    for (int b : p.col_bits) c = (c << 1) | bit_of(idx, p.n, b);
    out.m.at(r, c) = state.amp(idx);
  }
  return out;
}

/// Determinant with the zero decision that was applied: exact zeros are
/// literal, float zeros mean |det| at or below zero_bound (the scaled
/// Hadamard bound of the input).
template <class S>
struct DetValue {
    S value = scalar_traits<S>::zero();
    bool zero_verdict = true;
    double zero_bound = 0.0;
};

/// Fraction-free Bareiss elimination with first-nonzero pivot row search.
/// Intermediate entries stay rational; every division is exact.
inline DetValue<GaussianRational> det_exact(const SquareMatrix<GaussianRational> &input) {
  const int d = input.dim();
  SquareMatrix<GaussianRational> m = input;
  GaussianRational prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    int pivot = -1;
    for (int r = k; r < d; ++r) {
      if (!m.at(r, k).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return DetValue<GaussianRational>{GaussianRational(), true, 0.0};
    if (pivot != k) {
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = GaussianRational();
    }
    prev = m.at(k, k);
  }
  GaussianRational det = m.at(d - 1, d - 1);
  if (sign < 0) det = -det;
  return DetValue<GaussianRational>{det, det.is_zero(), 0.0};
}

inline constexpr double kDefaultZeroFactor = 1e-9;

/// LU with partial pivoting.  The zero verdict compares |det| against
/// threshold_factor times the Hadamard bound (product of Euclidean row norms)
/// of the input; a vanishing bound forces the zero verdict.  Non-finite
/// entries are rejected.
inline DetValue<Complex> det_float(const SquareMatrix<Complex> &input,
                                   double threshold_factor = kDefaultZeroFactor) {
  const int d = input.dim();
  double hadamard = 1.0;
  for (int r = 0; r < d; ++r) {
    double row_norm_sq = 0.0;
    for (int c = 0; c < d; ++c) {
      const Complex v = input.at(r, c);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("non-finite matrix entry");
      row_norm_sq += std::norm(v);
    }
    hadamard *= std::sqrt(row_norm_sq);
  }

  SquareMatrix<Complex> m = input;
  Complex det(1.0, 0.0);
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    int pivot = k;
    double best = std::abs(m.at(k, k));
    for (int r = k + 1; r < d; ++r) {
      const double mag = std::abs(m.at(r, k));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) {
      det = Complex(0.0, 0.0);
      break;
    }
    if (pivot != k) {
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    det *= m.at(k, k);
    for (int i = k + 1; i < d; ++i) {
      const Complex factor = m.at(i, k) / m.at(k, k);
      m.at(i, k) = Complex(0.0, 0.0);
      for (int j = k + 1; j < d; ++j) m.at(i, j) -= factor * m.at(k, j);
    }
  }
  if (sign < 0) det = -det;

  const double bound = threshold_factor * hadamard;
  const bool zero = (hadamard == 0.0) || (std::abs(det) <= bound);
  return DetValue<Complex>{det, zero, bound};
}

inline DetValue<GaussianRational> det_of(const SquareMatrix<GaussianRational> &m,
                                         double /*threshold_factor*/ = kDefaultZeroFactor) {
  return det_exact(m);
}

inline DetValue<Complex> det_of(const SquareMatrix<Complex> &m,
                                double threshold_factor = kDefaultZeroFactor) {
  return det_float(m, threshold_factor);
}

} // namespace slocc
