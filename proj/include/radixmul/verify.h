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

// Verification campaigns and cycle sweeps used by the CLI and the
// acceptance suite.

#ifndef RADIXMUL_VERIFY_H_
#define RADIXMUL_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radixmul/engine.h"
#include "radixmul/word.h"

namespace radixmul {

struct OperandPair {
  uint128 a = 0;
  uint128 b = 0;
};

struct Counterexample {
  std::size_t index = 0;  // position in the input set
  OperandPair operands;
  std::string reason;
};

struct VerifySummary {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  // First failure in input order, regardless of worker scheduling.
  std::optional<Counterexample> first_failure;
};

// Checks one pair: oracle == shift-and-add == simulator, per-cycle
// conservation, and cycle_count_model == simulated cycles. Returns the
// failure reason, or nothing on success.
std::optional<std::string> check_pair(const OperandPair& pair,
                                      const SimConfig& cfg);

// Every (a, b) with a, b < 2^n, a-major order. ConfigError for n > 10.
std::vector<OperandPair> exhaustive_pairs(int n);

// `count` uniform pairs below 2^n from a 64-bit Mersenne Twister seeded
// with `seed`. n <= 64.
std::vector<OperandPair> random_pairs(int n, std::uint64_t count,
                                      std::uint64_t seed);

// Runs check_pair over `pairs` on `jobs` threads (0 picks the hardware
// concurrency). Result is independent of `jobs`.
VerifySummary verify_pairs(const std::vector<OperandPair>& pairs,
                           const SimConfig& cfg, unsigned jobs = 1);

struct SweepRow {
  int k = 0;
  int digit_cycles = 0;
  int full_width_cycles = 0;
  int early_stop_min = 0;  // b = 0
  int early_stop_max = 0;  // all-ones operands
  int adder_width = 0;
  int table_size = 0;      // stored odd multiples, 2^(k-1)
};

// One row per k in [k_lo, k_hi], using the default adder width for each k.
// ConfigError unless 1 <= k_lo <= k_hi <= min(8, n).
std::vector<SweepRow> sweep(int n, int k_lo, int k_hi);

}  // namespace radixmul

#endif  // RADIXMUL_VERIFY_H_
