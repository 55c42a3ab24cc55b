// Copyright 2026 The radixmul Authors.
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

#include "radixmul/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "radixmul/baseline.h"
#include "radixmul/errors.h"
#include "radixmul/json_io.h"
#include "radixmul/verify.h"

namespace radixmul {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct CommonOptions {
  int n = 16;
  int k = 3;
  int adder_width = 0;  // 0: n + 3k
  double clock_ns = 40.0;
  double load_ns = 30.0;
  std::string flush = "full_width";
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_k = true) {
  cmd->add_option("--n", opts.n, "Operand width in bits")
      ->capture_default_str();
  if (with_k) {
    cmd->add_option("--k", opts.k, "Multiplier bits consumed per cycle")
        ->capture_default_str();
  }
  cmd->add_option("--adder-width", opts.adder_width,
                  "Central adder width (default n + 3k)");
  cmd->add_option("--clock-ns", opts.clock_ns, "Clock period in ns")
      ->capture_default_str();
  cmd->add_option("--load-ns", opts.load_ns, "Delay to load B in ns")
      ->capture_default_str();
  cmd->add_option("--flush", opts.flush, "full_width or early_stop")
      ->capture_default_str();
  cmd->add_flag("--json", opts.json, "Machine-readable output");
}

SimConfig make_config(const CommonOptions& opts) {
  SimConfig cfg;
  cfg.n = opts.n;
  cfg.k = opts.k;
  if (opts.adder_width != 0) cfg.adder_width = opts.adder_width;
  cfg.clock_period_ns = opts.clock_ns;
  cfg.load_delay_ns = opts.load_ns;
  cfg.flush_policy = parse_flush_policy(opts.flush);
  cfg.validate();
  return cfg;
}

// "lo..hi" or a single k.
std::pair<int, int> parse_k_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw ParseError("bad k range '" + text + "'");
    }
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int k = to_int(text);
    return {k, k};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RADIXMUL_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("RADIXMUL_SEED is not an integer: ") + env);
  }
  return kDefaultSeed;
}

int run_mul(const CommonOptions& opts, const std::string& a_text,
            const std::string& b_text, const std::string& trace_path,
            std::ostream& out) {
  const SimConfig cfg = make_config(opts);
  const Word a = parse_word(a_text, cfg.n);
  const Word b = parse_word(b_text, cfg.n);
  const SimResult result = simulate(a, b, cfg);
  if (result.product != Word(a.value() * b.value(), 2 * cfg.n)) {
    throw CorrectnessError("simulated product disagrees with the oracle");
  }

  const Json doc = trace_to_json(result);
  if (!trace_path.empty()) {
    std::ofstream file(trace_path);
    if (!file) throw ParseError("cannot open trace file '" + trace_path + "'");
    file << doc.dump(2) << '\n';
  }
  if (opts.json) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "product:       " << to_binary_string(result.product) << '\n'
      << "decimal:       " << to_decimal_string(result.product.value()) << '\n'
      << "hex:           " << to_hex_string(result.product.value()) << '\n'
      << "cycles:        " << result.cycles << " (" << result.digit_cycles
      << " digit cycles, " << to_string(cfg.flush_policy) << ")\n"
      << "total_time_ns: " << result.total_time_ns << '\n';
  return kExitOk;
}

int run_verify(const CommonOptions& opts, bool exhaustive,
               std::optional<std::uint64_t> random_count,
               std::optional<std::uint64_t> seed_flag, unsigned jobs,
               std::ostream& out) {
  const SimConfig cfg = make_config(opts);
  if (exhaustive == random_count.has_value()) {
    throw ParseError("verify needs exactly one of --exhaustive or --random");
  }
  std::vector<OperandPair> pairs;
  std::optional<std::uint64_t> seed;
  if (exhaustive) {
    pairs = exhaustive_pairs(cfg.n);
  } else {
    seed = resolve_seed(seed_flag);
    pairs = random_pairs(cfg.n, *random_count, *seed);
  }
  const VerifySummary summary = verify_pairs(pairs, cfg, jobs);

  if (opts.json) {
    Json doc;
    doc["n"] = cfg.n;
    doc["k"] = cfg.k;
    doc["mode"] = exhaustive ? "exhaustive" : "random";
    doc["seed"] = seed ? Json(*seed) : Json(nullptr);
    doc["pairs"] = summary.pairs;
    doc["failures"] = summary.failures;
    if (summary.first_failure) {
      const Counterexample& c = *summary.first_failure;
      doc["first_failure"] = {{"a", to_hex_string(c.operands.a)},
                              {"b", to_hex_string(c.operands.b)},
                              {"reason", c.reason}};
    } else {
      doc["first_failure"] = nullptr;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "verify n=" << cfg.n << " k=" << cfg.k << ' '
        << (exhaustive ? "exhaustive" : "random");
    if (seed) out << " seed=" << *seed;
    out << ": " << summary.pairs << " pairs, " << summary.failures
        << " failures\n";
    if (summary.first_failure) {
      const Counterexample& c = *summary.first_failure;
      out << "first counterexample: a=" << to_hex_string(c.operands.a)
          << " b=" << to_hex_string(c.operands.b) << ": " << c.reason << '\n';
    }
  }
  return summary.failures == 0 ? kExitOk : kExitCorrectness;
}

int run_sweep(const CommonOptions& opts, const std::string& k_range,
              std::ostream& out) {
  const auto [lo, hi] =
      k_range.empty() ? std::pair{1, std::min(8, opts.n)} : parse_k_range(k_range);
  const std::vector<SweepRow> rows = sweep(opts.n, lo, hi);
  if (opts.json) {
    Json doc = Json::array();
    for (const SweepRow& r : rows) {
      doc.push_back({{"k", r.k},
                     {"digit_cycles", r.digit_cycles},
                     {"full_width_cycles", r.full_width_cycles},
                     {"early_stop_min_cycles", r.early_stop_min},
                     {"early_stop_max_cycles", r.early_stop_max},
                     {"adder_width", r.adder_width},
                     {"table_size", r.table_size}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "n = " << opts.n << '\n'
      << std::setw(3) << "k" << std::setw(8) << "digits" << std::setw(12)
      << "full_width" << std::setw(16) << "early_stop" << std::setw(8)
      << "adder" << std::setw(7) << "table" << '\n';
  for (const SweepRow& r : rows) {
    const std::string early =
        std::to_string(r.early_stop_min) + ".." + std::to_string(r.early_stop_max);
    out << std::setw(3) << r.k << std::setw(8) << r.digit_cycles
        << std::setw(12) << r.full_width_cycles << std::setw(16) << early
        << std::setw(8) << r.adder_width << std::setw(7) << r.table_size
        << '\n';
  }
  return kExitOk;
}

int run_compare(const CommonOptions& opts, const std::string& a_text,
                const std::string& b_text, std::ostream& out) {
  const SimConfig cfg = make_config(opts);
  const ComparisonReport report =
      compare(parse_word(a_text, cfg.n), parse_word(b_text, cfg.n), cfg);
  if (opts.json) {
    out << report_to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "product:          " << to_decimal_string(report.product) << " ("
      << to_hex_string(report.product) << ")\n"
      << "multiplier          cycles  partial products\n"
      << "shift-and-add     " << std::setw(8) << report.baseline_cycles
      << std::setw(18) << report.baseline_cycles << '\n'
      << "reformed (k=" << cfg.k << ")    " << std::setw(8)
      << report.reformed_cycles << std::setw(18) << report.reformed_digit_cycles
      << '\n'
      << "speedup:          " << std::fixed << std::setprecision(3)
      << report.speedup << '\n';
  out.unsetf(std::ios::floatfield);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cycle-accurate simulator of a digit-serial radix-2^k "
               "unsigned multiplier",
               "radixmul"};
  app.require_subcommand(1);

  CommonOptions mul_opts, verify_opts, sweep_opts, compare_opts;
  std::string a_text, b_text, trace_path, k_range;
  bool exhaustive = false;
  std::optional<std::uint64_t> random_count, seed;
  unsigned jobs = 1;

  CLI::App* mul = app.add_subcommand("mul", "Multiply two operands");
  add_common(mul, mul_opts);
  mul->add_option("--a", a_text, "Multiplicand (decimal, 0x hex, bin:...)")
      ->required();
  mul->add_option("--b", b_text, "Multiplier (decimal, 0x hex, bin:...)")
      ->required();
  mul->add_option("--trace", trace_path, "Write the JSON cycle trace here");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check simulator against shift-and-add and native multiply");
  add_common(verify, verify_opts);
  verify->add_flag("--exhaustive", exhaustive, "All operand pairs (n <= 10)");
  verify->add_option("--random", random_count, "Number of random pairs");
  verify->add_option("--seed", seed, "RNG seed (fallback: RADIXMUL_SEED)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Cycle counts and sizes over a range of k");
  add_common(sweep_cmd, sweep_opts, /*with_k=*/false);
  sweep_cmd->add_option("--k", k_range, "k or lo..hi (default 1..min(8, n))");

  CLI::App* cmp =
      app.add_subcommand("compare", "Compare against shift-and-add");
  add_common(cmp, compare_opts);
  cmp->add_option("--a", a_text, "Multiplicand")->required();
  cmp->add_option("--b", b_text, "Multiplier")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mul->parsed()) return run_mul(mul_opts, a_text, b_text, trace_path, out);
    if (verify->parsed()) {
      return run_verify(verify_opts, exhaustive, random_count, seed, jobs, out);
    }
    if (sweep_cmd->parsed()) return run_sweep(sweep_opts, k_range, out);
    if (cmp->parsed()) return run_compare(compare_opts, a_text, b_text, out);
  } catch (const CorrectnessError& e) {
    err << "correctness failure: " << e.what() << '\n';
    return kExitCorrectness;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace radixmul
