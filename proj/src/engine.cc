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

#include "radixmul/engine.h"

#include <algorithm>
#include <string>

#include "radixmul/errors.h"

namespace radixmul {
namespace {

int ceil_div(int x, int y) { return (x + y - 1) / y; }

}  // namespace

std::string_view to_string(FlushPolicy policy) {
  switch (policy) {
    case FlushPolicy::kFullWidth:
      return "full_width";
    case FlushPolicy::kEarlyStop:
      return "early_stop";
  }
  return "unknown";
}

FlushPolicy parse_flush_policy(std::string_view text) {
  if (text == "full_width") return FlushPolicy::kFullWidth;
  if (text == "early_stop") return FlushPolicy::kEarlyStop;
  throw ParseError("unknown flush policy '" + std::string(text) +
                   "' (expected full_width or early_stop)");
}

void SimConfig::validate() const {
  if (n < 1 || 2 * n > kMaxWidth) {
    throw ConfigError("operand width n = " + std::to_string(n) +
                      " outside [1, " + std::to_string(kMaxWidth / 2) + "]");
  }
  if (k < 1 || k > n) {
    throw ConfigError("digit width k = " + std::to_string(k) +
                      " outside [1, n = " + std::to_string(n) + "]");
  }
  const int width = effective_adder_width();
  if (width < n + k + 2 || width > kMaxWidth) {
    throw ConfigError("adder width " + std::to_string(width) +
                      " outside [n + k + 2 = " + std::to_string(n + k + 2) +
                      ", " + std::to_string(kMaxWidth) + "]");
  }
  if (!(clock_period_ns > 0.0)) throw ConfigError("clock period must be > 0");
  if (!(load_delay_ns >= 0.0)) throw ConfigError("load delay must be >= 0");
}

int digit_cycle_count(int n, int k) { return ceil_div(n, k); }

SimResult simulate(const Word& a, const Word& b, const SimConfig& cfg) {
  cfg.validate();
  if (a.width() != cfg.n || b.width() != cfg.n) {
    throw ConfigError("operand widths " + std::to_string(a.width()) + " and " +
                      std::to_string(b.width()) + " do not match n = " +
                      std::to_string(cfg.n));
  }
  const int k = cfg.k;
  const int adder_width = cfg.effective_adder_width();
  const int emission_target = ceil_div(2 * cfg.n, k);
  const uint128 residue_bound = uint128{1} << (cfg.n + 1);

  const MultipleTable table = build_multiple_table(a, k);
  const std::vector<Digit> digits = split_digits(b, k);

  SimResult result;
  result.config = cfg;
  result.a = a;
  result.b = b;
  result.ladder_shifts = table.ladder_shifts();
  result.ladder_adds = table.ladder_adds();
  result.trace.reserve(static_cast<std::size_t>(
      std::max<int>(emission_target, static_cast<int>(digits.size())) + 1));

  Word residue = Word::zero(adder_width - k);
  for (int cycle = 0;; ++cycle) {
    const bool has_digit = cycle < static_cast<int>(digits.size());
    if (!has_digit) {
      const bool done = cfg.flush_policy == FlushPolicy::kFullWidth
                            ? cycle >= emission_target
                            : residue.value() == 0;
      if (done) break;
    }

    CycleRecord rec;
    rec.cycle_index = cycle;
    Word pp = Word::zero(table.entry_width() + k - 1);
    if (has_digit) {
      const Digit d = digits[static_cast<std::size_t>(cycle)];
      const DigitDecomposition dec = decompose_digit(d);
      pp = barrel_shift(mux_select(table, dec.odd_core), dec.shift, k);
      rec.digit = d;
      rec.odd_core = dec.odd_core;
      rec.shift = dec.shift;
      ++result.digit_cycles;
    }
    rec.pp_value = pp.value();
    rec.residue_before = residue.value();

    const AdderStep step = central_adder_step(residue, pp, k, adder_width);
    residue = step.residue;
    rec.residue_after = residue.value();
    rec.emitted = step.emitted.value;
    if (rec.residue_after >= residue_bound) {
      throw SizingError("residue " + to_hex_string(rec.residue_after) +
                        " breaks bound 2^(n+1) at cycle " +
                        std::to_string(cycle));
    }
    result.trace.push_back(rec);
  }

  result.cycles = static_cast<int>(result.trace.size());
  result.product = assemble_product(result.trace, cfg.n, k);
  result.total_time_ns =
      cfg.load_delay_ns + result.cycles * cfg.clock_period_ns;
  return result;
}

Word assemble_product(const std::vector<CycleRecord>& records, int n, int k) {
  const int width = 2 * n;
  uint128 value = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const uint128 emitted = records[i].emitted;
    if (emitted == 0) continue;
    const int offset = static_cast<int>(i) * k;
    if (offset + bit_length(emitted) > width) {
      throw SizingError("emission " + std::to_string(i) +
                        " lands beyond the " + std::to_string(width) +
                        "-bit output register");
    }
    value |= emitted << offset;
  }
  return Word(value, width);
}

int cycle_count_model(const Word& a, const Word& b, const SimConfig& cfg) {
  const int d = digit_cycle_count(cfg.n, cfg.k);
  if (cfg.flush_policy == FlushPolicy::kFullWidth) {
    return std::max(d, ceil_div(2 * cfg.n, cfg.k));
  }
  const int product_bits = bit_length(a.value() * b.value());
  return d + ceil_div(std::max(0, product_bits - cfg.k * d), cfg.k);
}

bool check_conservation(const std::vector<CycleRecord>& records, int k) {
  return std::all_of(records.begin(), records.end(), [k](const CycleRecord& r) {
    return r.emitted + (r.residue_after << k) == r.residue_before + r.pp_value;
  });
}

}  // namespace radixmul
