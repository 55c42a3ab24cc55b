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

// Cycle-accurate simulation of the digit-serial multiplier.
//
// Each cycle the B controller hands one k-bit digit to the mux/shifter,
// the central adder adds the partial product to the fed-back residue and
// k product bits leave for the output registers. Once the digits run out
// the adder keeps draining with a zero partial product (flush cycles).

#ifndef RADIXMUL_ENGINE_H_
#define RADIXMUL_ENGINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radixmul/datapath.h"
#include "radixmul/word.h"

namespace radixmul {

enum class FlushPolicy {
  // Run until ceil(2n/k) emissions, independent of the operands.
  kFullWidth,
  // Stop once every digit is consumed and the residue is zero.
  kEarlyStop,
};

std::string_view to_string(FlushPolicy policy);
// Accepts "full_width" and "early_stop". ParseError otherwise.
FlushPolicy parse_flush_policy(std::string_view text);

// Defaults reproduce the 16x16, radix-8 hardware: 25-bit adder, 40 ns
// clock, 30 ns to load B.
struct SimConfig {
  int n = 16;
  int k = 3;
  std::optional<int> adder_width;  // unset selects n + 3k
  double clock_period_ns = 40.0;
  double load_delay_ns = 30.0;
  FlushPolicy flush_policy = FlushPolicy::kFullWidth;

  static int default_adder_width(int n, int k) { return n + 3 * k; }

  int effective_adder_width() const {
    return adder_width.value_or(default_adder_width(n, k));
  }

  // ConfigError unless 1 <= k <= n, 2n <= kMaxWidth, adder width
  // >= n + k + 2, clock > 0 and load delay >= 0.
  void validate() const;
};

struct CycleRecord {
  int cycle_index = 0;
  std::optional<Digit> digit;  // empty on flush cycles
  unsigned odd_core = 0;
  int shift = 0;
  uint128 pp_value = 0;
  uint128 residue_before = 0;
  uint128 residue_after = 0;
  unsigned emitted = 0;
};

struct SimResult {
  SimConfig config;
  Word a;
  Word b;
  Word product;  // 2n bits
  int cycles = 0;
  int digit_cycles = 0;
  double total_time_ns = 0.0;
  std::vector<CycleRecord> trace;
  // Shift and add counts spent building the odd-multiple table.
  int ladder_shifts = 0;
  int ladder_adds = 0;
};

// Runs the multiplier on a and b, both cfg.n bits wide. ConfigError on
// width mismatch or invalid config; SizingError if the adder is too
// narrow or the residue bound residue < 2^(n+1) is ever violated.
SimResult simulate(const Word& a, const Word& b, const SimConfig& cfg);

// Output registers: emission i lands at bit offset i*k. SizingError if a
// set bit would land at or above 2n.
Word assemble_product(const std::vector<CycleRecord>& records, int n, int k);

// Closed-form cycle count for simulate(a, b, cfg). With d the number of
// digits of the padded multiplier:
//   full_width  max(d, ceil(2n/k))
//   early_stop  d + ceil(max(0, bits(a*b) - k*d) / k)
int cycle_count_model(const Word& a, const Word& b, const SimConfig& cfg);

// ceil(n/k): digits in the padded multiplier.
int digit_cycle_count(int n, int k);

// True iff every record satisfies emitted + 2^k * residue_after ==
// residue_before + pp_value.
bool check_conservation(const std::vector<CycleRecord>& records, int k);

}  // namespace radixmul

#endif  // RADIXMUL_ENGINE_H_
