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

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "slocc/completeness.hpp"
#include "slocc/errors.hpp"
#include "slocc/invariants.hpp"
#include "slocc/partition.hpp"
#include "slocc/scalar.hpp"
#include "slocc/state.hpp"

namespace slocc {

inline constexpr const char *kStateHeader = "# slocc-state v1";

enum class NumKind { Int, Rational, Decimal };

struct NumToken {
    NumKind kind = NumKind::Int;
    std::string text;
};

namespace detail {

inline bool all_digits(const std::string &s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace detail

/// Classify and validate one amplitude component: integer ("-3"), rational
/// ("5/12", denominator positive and nonzero), or decimal ("0.25", "1e-3").
inline NumToken classify_number(const std::string &s) {
  if (s.empty()) throw ParseError("empty number");
  const std::string body = (s[0] == '-') ? s.substr(1) : s;
  if (body.empty()) throw ParseError("bare sign is not a number: '" + s + "'");

  const auto slash = body.find('/');
  if (slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw ParseError("malformed rational: '" + s + "'");
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError("rational with zero denominator: '" + s + "'");
    return NumToken{NumKind::Rational, s};
  }

  if (detail::all_digits(body)) return NumToken{NumKind::Int, s};

  const char *begin = s.c_str();
  char *end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + s.size()) throw ParseError("malformed number: '" + s + "'");
  if (!std::isfinite(value)) throw ParseError("non-finite number: '" + s + "'");
  return NumToken{NumKind::Decimal, s};
}

inline mpq_class rational_of(const NumToken &token) {
  if (token.kind == NumKind::Decimal)
    throw ParseError("decimal amplitude in exact context: '" + token.text + "'");
  mpq_class q(token.text, 10);
  q.canonicalize();
  return q;
}

inline double double_of(const NumToken &token) {
  if (token.kind == NumKind::Decimal) return std::strtod(token.text.c_str(), nullptr);
  return rational_of(token).get_d();
}

/// One parsed state file: explicit entries only, order preserved.
struct RawStateFile {
    int n = 0;
    std::vector<std::pair<std::uint64_t, std::array<NumToken, 2>>> entries;
    bool exact_eligible = true;
};

/// Parse the "# slocc-state v1" format: the header line, an "n <even>" line,
/// then "<index> <re> <im>" lines.  Later blank lines and '#' comments are
/// skipped; omitted indices are zero; a duplicated index is an error.
/// Structural problems throw ParseError; an invalid qubit count DomainError.
inline RawStateFile parse_state_file(std::istream &in) {
  RawStateFile out;
  std::string line;

  if (!std::getline(in, line)) throw ParseError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kStateHeader)
    throw ParseError("missing header line '" + std::string(kStateHeader) + "'");

  bool have_n = false;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front()[0] == '#') continue;

    if (!have_n) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw ParseError("expected 'n <qubits>' before amplitude lines");
      int n = 0;
      const auto [ptr, ec] = std::from_chars(tokens[1].data(),
                                             tokens[1].data() + tokens[1].size(), n);
      if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size())
        throw ParseError("malformed qubit count: '" + tokens[1] + "'");
      check_qubit_count(n, kHardMaxQubits);
      out.n = n;
      seen.assign(std::size_t(1) << n, false);
      have_n = true;
      continue;
    }

    if (tokens.size() != 3)
      throw ParseError("expected '<index> <re> <im>': '" + line + "'");
    std::uint64_t index = 0;
    const auto [ptr, ec] = std::from_chars(tokens[0].data(),
                                           tokens[0].data() + tokens[0].size(), index);
    if (ec != std::errc() || ptr != tokens[0].data() + tokens[0].size())
      throw ParseError("malformed index: '" + tokens[0] + "'");
    if (index >= (std::uint64_t(1) << out.n))
      throw ParseError("index out of range: " + tokens[0]);
    if (seen[index]) throw ParseError("duplicate index: " + tokens[0]);
    seen[index] = true;

    std::array<NumToken, 2> comps = {classify_number(tokens[1]), classify_number(tokens[2])};
    if (comps[0].kind == NumKind::Decimal || comps[1].kind == NumKind::Decimal)
      out.exact_eligible = false;
    out.entries.emplace_back(index, std::move(comps));
  }
  if (!have_n) throw ParseError("missing 'n <qubits>' line");
  return out;
}

/// Exact realization.  Only integer and rational amplitudes qualify; a file
/// carrying decimals is rejected rather than rounded.
inline PureState<GaussianRational> realize_exact(const RawStateFile &raw,
                                                 int max_n = kDefaultMaxQubitsExact) {
  check_qubit_count(raw.n, max_n);
  if (!raw.exact_eligible)
    throw ParseError("decimal amplitudes cannot be realized exactly");
  PureState<GaussianRational> state(raw.n);
  for (const auto &[index, comps] : raw.entries)
    state.amp(index) = GaussianRational(rational_of(comps[0]), rational_of(comps[1]));
  return state;
}

inline PureState<Complex> realize_float(const RawStateFile &raw,
                                        int max_n = kDefaultMaxQubitsFloat) {
  check_qubit_count(raw.n, max_n);
  PureState<Complex> state(raw.n);
  for (const auto &[index, comps] : raw.entries)
    state.amp(index) = Complex(double_of(comps[0]), double_of(comps[1]));
  return state;
}

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error("double formatting failed");
  return std::string(buf, ptr);
}

inline void write_state(std::ostream &out, const PureState<GaussianRational> &state) {
  out << kStateHeader << "\n" << "n " << state.qubits() << "\n";
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    const GaussianRational &a = state.amp(idx);
    if (a.is_zero()) continue;
    out << idx << " " << a.real().get_str() << " " << a.imag().get_str() << "\n";
  }
}

inline void write_state(std::ostream &out, const PureState<Complex> &state) {
  out << kStateHeader << "\n" << "n " << state.qubits() << "\n";
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    const Complex a = state.amp(idx);
    if (a == Complex(0.0, 0.0)) continue;
    out << idx << " " << format_double(a.real()) << " " << format_double(a.imag()) << "\n";
  }
}

namespace detail {

inline std::string join_ints(const std::vector<int> &v, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace detail

/// One partition per line: "<index>  <sigma>  rows={...} cols={...}".
inline std::string enumerate_text(const std::vector<BitPartition> &partitions) {
  std::string out;
  for (const auto &p : partitions) {
    out += std::to_string(p.canonical_index) + "  " + sigma_string(p) + "  rows={" +
           detail::join_ints(p.row_bits, ",") + "} cols={" +
           detail::join_ints(p.col_bits, ",") + "}\n";
  }
  return out;
}

/// family_id as a JSON number when it fits a signed 64-bit value, else as a
/// decimal string.
inline nlohmann::json family_id_json(const mpz_class &id) {
  if (id.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(id.get_si()));
  return nlohmann::json(id.get_str());
}

inline nlohmann::json enumerate_json(const std::vector<BitPartition> &partitions) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &p : partitions) {
    rows.push_back({{"index", p.canonical_index},
                    {"k", p.k},
                    {"sigma", sigma_string(p)},
                    {"row_bits", p.row_bits},
                    {"col_bits", p.col_bits}});
  }
  return {{"format", "slocc-partitions"},
          {"n", partitions.empty() ? 0 : partitions.front().n},
          {"count", partitions.size()},
          {"partitions", rows}};
}

template <class S>
nlohmann::json invariants_json(const InvariantVector<S> &inv) {
  const Signature sig = signature_from(inv);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < inv.values.size(); ++i) {
    const auto &p = inv.partitions[i];
    const auto &v = inv.values[i];
    nlohmann::json row = {{"index", p.canonical_index},
                          {"sigma", sigma_string(p)},
                          {"row_bits", p.row_bits},
                          {"zero", v.zero_verdict}};
    if constexpr (scalar_traits<S>::is_exact) {
      row["re"] = v.value.real().get_str();
      row["im"] = v.value.imag().get_str();
    } else {
      row["re"] = v.value.real();
      row["im"] = v.value.imag();
      row["zero_bound"] = v.zero_bound;
    }
    rows.push_back(std::move(row));
  }
  return {{"format", "slocc-invariants"},
          {"n", inv.n},
          {"mode", scalar_traits<S>::is_exact ? "exact" : "float"},
          {"count", inv.values.size()},
          {"invariants", rows},
          {"signature", sig.delta_string()},
          {"family_id", family_id_json(sig.family_id())}};
}

inline nlohmann::json signature_json(const Signature &sig) {
  return {{"format", "slocc-signature"},
          {"n", sig.n},
          {"signature", sig.delta_string()},
          {"family_id", family_id_json(sig.family_id())}};
}

inline nlohmann::json equivalence_json(const InequivalenceResult &res) {
  return {{"format", "slocc-equivalence"},
          {"verdict", res.verdict == EquivalenceVerdict::Inequivalent ? "INEQUIVALENT"
                                                                      : "UNDECIDED"},
          {"signature_a", res.sig_a.delta_string()},
          {"signature_b", res.sig_b.delta_string()},
          {"family_id_a", family_id_json(res.sig_a.family_id())},
          {"family_id_b", family_id_json(res.sig_b.family_id())},
          {"witnesses", res.witnesses}};
}

inline nlohmann::json action_table_json(const ActionTable &table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &row : table.rows) {
    rows.push_back({{"i", row.i},
                    {"targets", row.targets},
                    {"signs", row.signs},
                    {"probes_used", row.probes_used}});
  }
  return {{"format", "slocc-completeness"},
          {"n", table.n},
          {"seed", table.seed},
          {"rows", rows}};
}

} // namespace slocc
