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

#include <cstdint>
#include <random>

#include "slocc/errors.hpp"
#include "slocc/scalar.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Seeded stream of raw 64-bit words with fixed derivations to small ints and
/// doubles.  The derivations are spelled out here rather than delegated to
/// distribution objects so the same seed yields the same draws on every
/// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi] by modulo reduction; the ranges used here
    /// are tiny relative to 2^64, so the bias is negligible.
    long next_int(long lo, long hi) {
      if (lo > hi) throw DomainError("empty integer range");
      const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
      return lo + static_cast<long>(next() % span);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-1, 1).
    double next_sym() { return 2.0 * next_unit() - 1.0; }

  private:
    std::mt19937_64 eng_;
};

/// Derive an independent sub-seed from (seed, k); one splitmix64 round.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace detail {

template <class S>
S draw_scalar(Rng &rng) {
  if constexpr (scalar_traits<S>::is_exact) {
    const long re = rng.next_int(-9, 9);
    const long im = rng.next_int(-9, 9);
    return GaussianRational::from_ints(re, im);
  } else {
    const double re = rng.next_sym();
    const double im = rng.next_sym();
    return Complex(re, im);
  }
}

} // namespace detail

/// Random dense state: amplitudes drawn in index order, real part before
/// imaginary.  Exact mode draws integers in [-9, 9]; float mode uniform
/// [-1, 1) components.
template <class S>
PureState<S> random_state(int n, std::uint64_t seed) {
  PureState<S> state(n);
  Rng rng(seed);
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx)
    state.amp(idx) = detail::draw_scalar<S>(rng);
  return state;
}

inline constexpr int kChainDrawLimit = 1000;
inline constexpr double kFloatChainMinDet = 0.1;

/// Random invertible chain: per qubit, entries e00, e01, e10, e11 drawn in
/// that order (real before imaginary), redrawn until the determinant is
/// nonzero (exact) or at least kFloatChainMinDet in magnitude (float).  A
/// qubit exhausting kChainDrawLimit attempts throws NonInvertibleError.
template <class S>
OperatorChain<S> random_invertible_chain(int n, std::uint64_t seed) {
  check_qubit_count(n, kHardMaxQubits);
  Rng rng(seed);
  std::vector<LocalOperator<S>> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    for (int attempt = 0; attempt < kChainDrawLimit; ++attempt) {
      LocalOperator<S> a;
      a.e00 = detail::draw_scalar<S>(rng);
      a.e01 = detail::draw_scalar<S>(rng);
      a.e10 = detail::draw_scalar<S>(rng);
      a.e11 = detail::draw_scalar<S>(rng);
      const S det = a.det();
      bool ok;
      if constexpr (scalar_traits<S>::is_exact) {
        ok = !scalar_traits<S>::is_zero(det);
      } else {
        ok = std::abs(det) >= kFloatChainMinDet;
      }
      if (ok) {
        ops.push_back(a);
        found = true;
        break;
      }
    }
    if (!found) throw NonInvertibleError("no invertible operator found within draw limit");
  }
  return OperatorChain<S>(std::move(ops));
}

} // namespace slocc
