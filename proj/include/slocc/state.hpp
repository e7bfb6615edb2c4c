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

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/permutation.hpp"
#include "slocc/scalar.hpp"

namespace slocc {

/// Default caps on the qubit count, by arithmetic mode.  Overridable at the
/// tool level; the library itself only requires n even and small enough for
/// the 2^n amplitude vector to fit in memory.
inline constexpr int kDefaultMaxQubitsExact = 8;
inline constexpr int kDefaultMaxQubitsFloat = 12;
inline constexpr int kHardMaxQubits = 28;

inline void check_qubit_count(int n, int max_n) {
  if (n < 2 || n % 2 != 0) throw DomainError("qubit count must be even and at least 2");
  if (n > max_n) throw DomainError("qubit count exceeds the configured maximum");
}

/// Bit k of a basis index, with qubit 1 the most significant of the n bits.
inline int bit_of(std::uint64_t index, int n, int k) {
  return static_cast<int>((index >> (n - k)) & 1u);
}

/// Pure state of an even number n of qubits: 2^n amplitudes indexed by basis
/// label, qubit 1 carried by the most significant bit of the index.
template <class S>
class PureState {
  public:
    explicit PureState(int n) : n_(n) {
      check_qubit_count(n, kHardMaxQubits);
      amp_.assign(std::size_t(1) << n, scalar_traits<S>::zero());
    }

    PureState(int n, std::vector<S> amplitudes) : n_(n), amp_(std::move(amplitudes)) {
      check_qubit_count(n, kHardMaxQubits);
      if (amp_.size() != (std::size_t(1) << n))
        throw DomainError("amplitude vector length must be 2^n");
    }

    int qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t(1) << n_; }

    const S &amp(std::uint64_t index) const { return amp_.at(index); }
    S &amp(std::uint64_t index) { return amp_.at(index); }

    const std::vector<S> &amplitudes() const { return amp_; }

  private:
    int n_;
    std::vector<S> amp_;
};

template <class S>
PureState<S> make_basis_state(int n, std::uint64_t index) {
  PureState<S> state(n);
  if (index >= state.dim()) throw DomainError("basis index out of range");
  state.amp(index) = scalar_traits<S>::one();
  return state;
}

template <class S>
PureState<S> scale_state(const PureState<S> &state, const S &factor) {
  PureState<S> out = state;
  for (std::uint64_t i = 0; i < out.dim(); ++i) out.amp(i) = out.amp(i) * factor;
  return out;
}

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Exact states carry unit entries; float states carry 1/sqrt(#terms) so the
// result is normalized.
template <class S>
S equal_weight(std::uint64_t terms) {
  if constexpr (scalar_traits<S>::is_exact) {
    (void)terms;
    return scalar_traits<S>::one();
  } else {
    return Complex(1.0 / std::sqrt(static_cast<double>(terms)), 0.0);
  }
}

} // namespace detail

/// (|0...0> + |1...1>), normalized in float mode.
template <class S>
PureState<S> ghz_state(int n) {
  PureState<S> state(n);
  const S w = detail::equal_weight<S>(2);
  state.amp(0) = w;
  state.amp(state.dim() - 1) = w;
  return state;
}

/// Equal-weight superposition of all basis labels of Hamming weight k,
/// 1 <= k <= n-1; normalized in float mode.
template <class S>
PureState<S> dicke_state(int n, int k) {
  PureState<S> state(n);
  if (k < 1 || k > n - 1) throw DomainError("excitation count must satisfy 1 <= k <= n-1");
  const S w = detail::equal_weight<S>(detail::binomial(n, k));
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx)
    if (std::popcount(idx) == k) state.amp(idx) = w;
  return state;
}

template <class S>
PureState<S> w_state(int n) {
  return dicke_state<S>(n, 1);
}

/// Six-qubit eight-term state with a single negative amplitude; all order-8
/// determinant invariants with an even number of label moves vanish on it
/// while the others do not.
template <class S>
PureState<S> chi_state() {
  PureState<S> state(6);
  const S w = detail::equal_weight<S>(8);
  for (std::uint64_t idx : {0ull, 5ull, 18ull, 23ull, 40ull, 45ull, 58ull})
    state.amp(idx) = w;
  state.amp(63) = -w;
  return state;
}

/// Single-qubit operator in the computational basis.
template <class S>
struct LocalOperator {
    S e00, e01, e10, e11;

    S det() const { return e00 * e11 - e01 * e10; }

    static LocalOperator identity() {
      return LocalOperator{scalar_traits<S>::one(), scalar_traits<S>::zero(),
                           scalar_traits<S>::zero(), scalar_traits<S>::one()};
    }
};

/// One local operator per qubit, A_1 (x) ... (x) A_n.  Invertibility is a
/// requirement of SLOCC usage, checked at the use site, not here.
template <class S>
class OperatorChain {
  public:
    explicit OperatorChain(std::vector<LocalOperator<S>> ops) : ops_(std::move(ops)) {
      if (ops_.empty()) throw DomainError("empty operator chain");
    }

    static OperatorChain identity(int n) {
      return OperatorChain(std::vector<LocalOperator<S>>(
          static_cast<std::size_t>(n), LocalOperator<S>::identity()));
    }

    int qubits() const { return static_cast<int>(ops_.size()); }

    const LocalOperator<S> &op(int k) const {
      if (k < 1 || k > qubits()) throw DomainError("operator index out of range");
      return ops_[static_cast<std::size_t>(k - 1)];
    }

    /// prod_k det A_k.
    S determinant_product() const {
      S p = scalar_traits<S>::one();
      for (const auto &a : ops_) p = p * a.det();
      return p;
    }

    /// All n determinants nonzero in the scalar's own equality.
    bool exactly_invertible() const {
      for (const auto &a : ops_)
        if (scalar_traits<S>::is_zero(a.det())) return false;
      return true;
    }

  private:
    std::vector<LocalOperator<S>> ops_;
};

/// (A_1 (x) ... (x) A_n) |psi>, one qubit contracted at a time.
template <class S>
PureState<S> apply_local_ops(const PureState<S> &state, const OperatorChain<S> &chain) {
  const int n = state.qubits();
  if (chain.qubits() != n) throw DomainError("operator chain length must equal qubit count");
  PureState<S> out = state;
  for (int k = 1; k <= n; ++k) {
    const LocalOperator<S> &a = chain.op(k);
    const std::uint64_t mask = std::uint64_t(1) << (n - k);
    for (std::uint64_t idx = 0; idx < out.dim(); ++idx) {
      if (idx & mask) continue;
      const S lo = out.amp(idx);
      const S hi = out.amp(idx | mask);
      out.amp(idx) = a.e00 * lo + a.e01 * hi;
      out.amp(idx | mask) = a.e10 * lo + a.e11 * hi;
    }
  }
  return out;
}

/// Relabel qubits by pi: out[j] = in[i] with bit k of i equal to bit pi(k)
/// of j, so the value carried by qubit k moves to position pi(k).
template <class S>
PureState<S> permute_qubits(const PureState<S> &state, const QubitPermutation &pi) {
  const int n = state.qubits();
  if (pi.size() != n) throw DomainError("permutation size must equal qubit count");
  PureState<S> out(n);
  for (std::uint64_t j = 0; j < out.dim(); ++j) {
    std::uint64_t i = 0;
    for (int k = 1; k <= n; ++k)
      i |= static_cast<std::uint64_t>(bit_of(j, n, pi(k))) << (n - k);
    out.amp(j) = state.amp(i);
  }
  return out;
}

} // namespace slocc
