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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slocc/slocc.hpp"

namespace {

using namespace slocc;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonInvertible = 4;
constexpr int kExitInequivalent = 10;

struct Options {
    std::string mode = "auto";
    double zero_factor = kDefaultZeroFactor;
    std::uint64_t seed = 0;
    bool json = false;
    int max_n = 0;

    int cap(bool exact) const {
      if (max_n > 0) return max_n;
      return exact ? kDefaultMaxQubitsExact : kDefaultMaxQubitsFloat;
    }

    /// Exact when forced, or in auto mode when the file qualifies and fits
    /// the exact cap.
    bool pick_exact(const RawStateFile &raw) const {
      if (mode == "exact") return true;
      if (mode == "float") return false;
      return raw.exact_eligible && raw.n <= cap(true);
    }

    bool pick_exact(const RawStateFile &a, const RawStateFile &b) const {
      if (mode == "exact") return true;
      if (mode == "float") return false;
      return pick_exact(a) && pick_exact(b);
    }
};

RawStateFile load_raw(const std::string &path) {
  if (path == "-") return parse_state_file(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_state_file(in);
}

void add_mode_options(CLI::App *sub, Options &opt) {
  sub->add_option("--mode", opt.mode, "arithmetic mode: auto, exact, or float")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  sub->add_option("--zero-factor", opt.zero_factor,
                  "float zero threshold as a multiple of the Hadamard bound");
  sub->add_option("--max-n", opt.max_n, "override the qubit-count cap");
}

std::string verdict_word(bool zero) { return zero ? "zero" : "nonzero"; }

std::string complex_str(const Complex &v) {
  return format_double(v.real()) + " " + format_double(v.imag());
}

template <class S>
void print_invariants_text(const InvariantVector<S> &inv) {
  const Signature sig = signature_from(inv);
  std::cout << "n " << inv.n << "\n";
  std::cout << "mode " << (scalar_traits<S>::is_exact ? "exact" : "float") << "\n";
  std::cout << "count " << inv.values.size() << "\n";
  for (std::size_t i = 0; i < inv.values.size(); ++i) {
    const auto &p = inv.partitions[i];
    const auto &v = inv.values[i];
    std::cout << p.canonical_index << "  " << sigma_string(p) << "  ";
    if constexpr (scalar_traits<S>::is_exact) {
      std::cout << v.value.real().get_str() << " " << v.value.imag().get_str();
    } else {
      std::cout << complex_str(v.value);
    }
    std::cout << "  " << verdict_word(v.zero_verdict) << "\n";
  }
  std::cout << "signature " << sig.delta_string() << "\n";
  std::cout << "family_id " << sig.family_id().get_str() << "\n";
}

int run_enumerate(int n, const Options &opt) {
  check_qubit_count(n, kHardMaxQubits);
  const auto parts = enumerate_partitions(n);
  if (opt.json) {
    std::cout << enumerate_json(parts).dump(2) << "\n";
  } else {
    std::cout << enumerate_text(parts);
  }
  return kExitOk;
}

int run_invariants(const std::string &file, const Options &opt) {
  const RawStateFile raw = load_raw(file);
  if (opt.pick_exact(raw)) {
    const auto inv = all_invariants(realize_exact(raw, opt.cap(true)), opt.zero_factor);
    if (opt.json) {
      std::cout << invariants_json(inv).dump(2) << "\n";
    } else {
      print_invariants_text(inv);
    }
  } else {
    const auto inv = all_invariants(realize_float(raw, opt.cap(false)), opt.zero_factor);
    if (opt.json) {
      std::cout << invariants_json(inv).dump(2) << "\n";
    } else {
      print_invariants_text(inv);
    }
  }
  return kExitOk;
}

int run_signature(const std::string &file, const Options &opt) {
  const RawStateFile raw = load_raw(file);
  const Signature sig =
      opt.pick_exact(raw)
          ? signature_of(realize_exact(raw, opt.cap(true)), opt.zero_factor)
          : signature_of(realize_float(raw, opt.cap(false)), opt.zero_factor);
  if (opt.json) {
    std::cout << signature_json(sig).dump(2) << "\n";
  } else {
    std::cout << "signature " << sig.delta_string() << "\n";
    std::cout << "family_id " << sig.family_id().get_str() << "\n";
  }
  return kExitOk;
}

int run_equivalence(const std::string &file_a, const std::string &file_b,
                    const Options &opt) {
  const RawStateFile raw_a = load_raw(file_a);
  const RawStateFile raw_b = load_raw(file_b);
  InequivalenceResult res;
  if (opt.pick_exact(raw_a, raw_b)) {
    res = inequivalence_check(realize_exact(raw_a, opt.cap(true)),
                              realize_exact(raw_b, opt.cap(true)), opt.zero_factor);
  } else {
    res = inequivalence_check(realize_float(raw_a, opt.cap(false)),
                              realize_float(raw_b, opt.cap(false)), opt.zero_factor);
  }
  if (opt.json) {
    std::cout << equivalence_json(res).dump(2) << "\n";
  } else {
    std::cout << "signature_a " << res.sig_a.delta_string() << "\n";
    std::cout << "signature_b " << res.sig_b.delta_string() << "\n";
    if (res.verdict == EquivalenceVerdict::Inequivalent) {
      std::cout << "verdict INEQUIVALENT\n";
      std::cout << "witnesses";
      for (int w : res.witnesses) std::cout << " " << w;
      std::cout << "\n";
    } else {
      std::cout << "verdict UNDECIDED\n";
    }
  }
  return res.verdict == EquivalenceVerdict::Inequivalent ? kExitInequivalent : kExitOk;
}

template <class S>
int run_verify_trials(const PureState<S> &state, std::uint64_t seed, int trials,
                      double zero_factor) {
  int passed = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t chain_seed = mix_seed(seed, static_cast<std::uint64_t>(t));
    const auto chain = random_invertible_chain<S>(state.qubits(), chain_seed);
    const auto report = verify_slocc_equation(state, chain, zero_factor);
    std::cout << "trial " << (t + 1) << " " << (report.all_pass ? "PASS" : "FAIL");
    if constexpr (scalar_traits<S>::is_exact) {
      std::cout << " exact\n";
    } else {
      std::cout << " max_rel_err " << format_double(report.max_rel_error) << "\n";
    }
    if (report.all_pass) ++passed;
  }
  std::cout << "passed " << passed << "/" << trials << "\n";
  return passed == trials ? kExitOk : kExitFail;
}

int run_verify(const std::string &file, int trials, const Options &opt) {
  if (trials < 1) throw DomainError("trial count must be positive");
  const RawStateFile raw = load_raw(file);
  if (opt.pick_exact(raw))
    return run_verify_trials(realize_exact(raw, opt.cap(true)), opt.seed, trials,
                             opt.zero_factor);
  return run_verify_trials(realize_float(raw, opt.cap(false)), opt.seed, trials,
                           opt.zero_factor);
}

int run_completeness(int n, int probes, const Options &opt) {
  check_qubit_count(n, opt.max_n > 0 ? opt.max_n : kDefaultMaxQubitsExact);
  const ActionTable table = completeness_table(n, opt.seed, probes);
  if (opt.json) {
    std::cout << action_table_json(table).dump(2) << "\n";
  } else {
    std::cout << render_action_table(table);
  }
  return kExitOk;
}

int run_canonical(const std::string &kind, int n, const std::string &out_path) {
  PureState<GaussianRational> state(2);
  if (kind == "ghz") {
    state = ghz_state<GaussianRational>(n);
  } else if (kind == "w") {
    state = w_state<GaussianRational>(n);
  } else if (kind == "chi6") {
    if (n != 6) throw DomainError("chi6 requires --n 6");
    state = chi_state<GaussianRational>();
  } else if (kind.rfind("dicke:", 0) == 0) {
    int k = 0;
    const std::string digits = kind.substr(6);
    try {
      k = std::stoi(digits);
    } catch (const std::exception &) {
      throw ParseError("malformed excitation count in '" + kind + "'");
    }
    if (std::to_string(k) != digits) throw ParseError("malformed excitation count in '" + kind + "'");
    state = dicke_state<GaussianRational>(n, k);
  } else {
    throw ParseError("unknown canonical kind: '" + kind +
                     "' (expected ghz, w, dicke:k, or chi6)");
  }

  if (out_path.empty() || out_path == "-") {
    write_state(std::cout, state);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);
    write_state(out, state);
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"determinant invariants of balanced index-bit partitions"};
  app.require_subcommand(1);

  Options opt;

  int enum_n = 0;
  auto *cmd_enumerate = app.add_subcommand("enumerate", "list the canonical bit partitions");
  cmd_enumerate->add_option("--n", enum_n, "qubit count (even)")->required();
  cmd_enumerate->add_flag("--json", opt.json, "emit JSON");

  std::string inv_file;
  auto *cmd_invariants =
      app.add_subcommand("invariants", "evaluate all determinant invariants of a state");
  cmd_invariants->add_option("file", inv_file, "state file, or - for stdin")->required();
  cmd_invariants->add_flag("--json", opt.json, "emit JSON");
  add_mode_options(cmd_invariants, opt);

  std::string sig_file;
  auto *cmd_signature =
      app.add_subcommand("signature", "zero-pattern signature and family id of a state");
  cmd_signature->add_option("file", sig_file, "state file, or - for stdin")->required();
  cmd_signature->add_flag("--json", opt.json, "emit JSON");
  add_mode_options(cmd_signature, opt);

  std::string eq_a, eq_b;
  auto *cmd_equivalence = app.add_subcommand(
      "equivalence-check", "compare zero-pattern signatures of two states");
  cmd_equivalence->add_option("file_a", eq_a, "first state file")->required();
  cmd_equivalence->add_option("file_b", eq_b, "second state file")->required();
  cmd_equivalence->add_flag("--json", opt.json, "emit JSON");
  add_mode_options(cmd_equivalence, opt);

  std::string ver_file;
  int ver_trials = 20;
  auto *cmd_verify = app.add_subcommand(
      "verify-slocc", "check the determinant relation under random invertible chains");
  cmd_verify->add_option("file", ver_file, "state file, or - for stdin")->required();
  cmd_verify->add_option("--trials", ver_trials, "number of random chains");
  cmd_verify->add_option("--seed", opt.seed, "seed for chain generation");
  add_mode_options(cmd_verify, opt);

  int comp_n = 0;
  int comp_probes = kDefaultProbes;
  auto *cmd_completeness = app.add_subcommand(
      "completeness", "action of the transpositions (1,i) on the invariant set");
  cmd_completeness->add_option("--n", comp_n, "qubit count (even)")->required();
  cmd_completeness->add_option("--probes", comp_probes, "probe states per transposition");
  cmd_completeness->add_option("--seed", opt.seed, "seed for probe states");
  cmd_completeness->add_flag("--json", opt.json, "emit JSON");
  cmd_completeness->add_option("--max-n", opt.max_n, "override the qubit-count cap");

  std::string canon_kind, canon_out;
  int canon_n = 0;
  auto *cmd_canonical =
      app.add_subcommand("canonical", "emit a named state as a slocc-state v1 file");
  cmd_canonical->add_option("kind", canon_kind, "ghz, w, dicke:k, or chi6")->required();
  cmd_canonical->add_option("--n", canon_n, "qubit count (even)")->required();
  cmd_canonical->add_option("-o,--output", canon_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(enum_n, opt);
    if (cmd_invariants->parsed()) return run_invariants(inv_file, opt);
    if (cmd_signature->parsed()) return run_signature(sig_file, opt);
    if (cmd_equivalence->parsed()) return run_equivalence(eq_a, eq_b, opt);
    if (cmd_verify->parsed()) return run_verify(ver_file, ver_trials, opt);
    if (cmd_completeness->parsed()) return run_completeness(comp_n, comp_probes, opt);
    if (cmd_canonical->parsed()) return run_canonical(canon_kind, canon_n, canon_out);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NonInvertibleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonInvertible;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}
