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

// Reference multipliers the reformed design is checked and timed against.

#ifndef RADIXMUL_BASELINE_H_
#define RADIXMUL_BASELINE_H_

#include "radixmul/engine.h"
#include "radixmul/word.h"

namespace radixmul {

struct ShiftAddResult {
  Word product;
  int cycles = 0;
};

// Classical one-bit-per-cycle shift-and-add: bit i of b selects a or 0,
// shifted i places and accumulated. One cycle per multiplier bit.
ShiftAddResult shift_add_multiply(const Word& a, const Word& b);

// Native wide-integer product, 2n bits.
Word oracle_multiply(const Word& a, const Word& b);

struct ComparisonReport {
  uint128 a = 0;
  uint128 b = 0;
  uint128 product = 0;
  int baseline_cycles = 0;
  int reformed_cycles = 0;        // including flush cycles
  int reformed_digit_cycles = 0;  // partial products generated
  double speedup = 0.0;           // baseline_cycles / reformed_cycles
};

// Runs oracle, shift-and-add and the simulator. CorrectnessError if any
// two products disagree.
ComparisonReport compare(const Word& a, const Word& b, const SimConfig& cfg);

}  // namespace radixmul

#endif  // RADIXMUL_BASELINE_H_
