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
#include <vector>

#include <gmpxx.h>

#include "slocc/detengine.hpp"
#include "slocc/errors.hpp"
#include "slocc/partition.hpp"
#include "slocc/scalar.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// The determinant invariants of one state, in canonical partition order.
template <class S>
struct InvariantVector {
    int n = 0;
    std::vector<BitPartition> partitions;
    std::vector<DetValue<S>> values;
};

template <class S>
InvariantVector<S> all_invariants(const PureState<S> &state,
                                  double threshold_factor = kDefaultZeroFactor) {
  InvariantVector<S> out;
  out.n = state.qubits();
  out.partitions = enumerate_partitions(out.n);
  out.values.reserve(out.partitions.size());
  for (const auto &p : out.partitions)
    out.values.push_back(det_of(build_matrix(state, p).m, threshold_factor));
  return out;
}

/// Zero pattern of the invariant vector: delta[i-1] is 1 when invariant i is
/// nonzero.  family_id packs delta_i into bit i-1, so delta_1 is the least
/// significant bit.
struct Signature {
    int n = 0;
    std::vector<bool> delta;

    /// delta_1 printed first (leftmost).
    std::string delta_string() const {
      std::string out;
      out.reserve(delta.size());
      for (bool d : delta) out += d ? '1' : '0';
      return out;
    }

    mpz_class family_id() const {
      mpz_class id = 0;
      for (std::size_t i = delta.size(); i-- > 0;) {
        id <<= 1;
        if (delta[i]) id += 1;
      }
      return id;
    }

    friend bool operator==(const Signature &a, const Signature &b) {
      return a.n == b.n && a.delta == b.delta;
    }
    friend bool operator!=(const Signature &a, const Signature &b) { return !(a == b); }
};

template <class S>
Signature signature_from(const InvariantVector<S> &inv) {
  Signature sig;
  sig.n = inv.n;
  sig.delta.reserve(inv.values.size());
  for (const auto &v : inv.values) sig.delta.push_back(!v.zero_verdict);
  return sig;
}

template <class S>
Signature signature_of(const PureState<S> &state,
                       double threshold_factor = kDefaultZeroFactor) {
  return signature_from(all_invariants(state, threshold_factor));
}

/// |a - b| relative to max(|a|, |b|); zero when both vanish.
inline double relative_error(const Complex &a, const Complex &b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline double relative_error(const GaussianRational &a, const GaussianRational &b) {
  return relative_error(a.to_complex(), b.to_complex());
}

inline constexpr double kSloccRelTol = 1e-8;

/// The determinant-product exponent 2^((n-2)/2): 1, 2, 4, ... for n = 2, 4,
/// 6, ...
inline std::uint64_t slocc_exponent(int n) {
  check_qubit_count(n, kHardMaxQubits);
  return std::uint64_t(1) << ((n - 2) / 2);
}

template <class S>
struct SloccEntryCheck {
    int partition_index = 0;
    S lhs, rhs;
    double rel_error = 0.0;
    bool pass = false;
};

template <class S>
struct SloccCheckReport {
    int n = 0;
    std::uint64_t exponent = 1;
    S det_product;
    std::vector<SloccEntryCheck<S>> entries;
    bool all_pass = false;
    double max_rel_error = 0.0;
};

/// Check, invariant by invariant, that the image of the state under an
/// invertible chain satisfies det M(b) = det M(a) * (prod_k det A_k)^e with
/// e = 2^((n-2)/2).  Exact mode demands equality; float mode a relative
/// error within kSloccRelTol.  A non-invertible chain is rejected before any
/// determinant is computed.
template <class S>
SloccCheckReport<S> verify_slocc_equation(const PureState<S> &state,
                                          const OperatorChain<S> &chain,
                                          double threshold_factor = kDefaultZeroFactor) {
  if (chain.qubits() != state.qubits())
    throw DomainError("operator chain length must equal qubit count");
  if (!chain.exactly_invertible())
    throw NonInvertibleError("operator chain contains a singular operator");

  SloccCheckReport<S> report;
  report.n = state.qubits();
  report.exponent = slocc_exponent(report.n);
  report.det_product = chain.determinant_product();
  const S factor = pow_int(report.det_product, report.exponent);

  const PureState<S> image = apply_local_ops(state, chain);
  const InvariantVector<S> before = all_invariants(state, threshold_factor);
  const InvariantVector<S> after = all_invariants(image, threshold_factor);

  report.all_pass = true;
  for (std::size_t i = 0; i < before.values.size(); ++i) {
    SloccEntryCheck<S> entry;
    entry.partition_index = static_cast<int>(i) + 1;
    entry.lhs = after.values[i].value;
    entry.rhs = before.values[i].value * factor;
    entry.rel_error = relative_error(entry.lhs, entry.rhs);
    if constexpr (scalar_traits<S>::is_exact) {
      entry.pass = entry.lhs == entry.rhs;
    } else {
      entry.pass = entry.rel_error <= kSloccRelTol;
    }
    report.all_pass = report.all_pass && entry.pass;
    report.max_rel_error = std::max(report.max_rel_error, entry.rel_error);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

enum class EquivalenceVerdict {
    Inequivalent,
    Undecided,
};

/// Invariant indices witnessing a signature mismatch; empty means the zero
/// patterns agree and the test is silent on equivalence.
struct InequivalenceResult {
    EquivalenceVerdict verdict = EquivalenceVerdict::Undecided;
    Signature sig_a, sig_b;
    std::vector<int> witnesses;
};

template <class S>
InequivalenceResult inequivalence_check(const PureState<S> &a, const PureState<S> &b,
                                        double threshold_factor = kDefaultZeroFactor) {
  if (a.qubits() != b.qubits())
    throw DomainError("states must have the same qubit count");
  InequivalenceResult out;
  out.sig_a = signature_of(a, threshold_factor);
  out.sig_b = signature_of(b, threshold_factor);
  for (std::size_t i = 0; i < out.sig_a.delta.size(); ++i)
    if (out.sig_a.delta[i] != out.sig_b.delta[i])
      out.witnesses.push_back(static_cast<int>(i) + 1);
  out.verdict = out.witnesses.empty() ? EquivalenceVerdict::Undecided
                                      : EquivalenceVerdict::Inequivalent;
  return out;
}

} // namespace slocc
