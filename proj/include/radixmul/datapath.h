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

// Behavioral models of the multiplier's hardware blocks.
//
//   initial adders   build_multiple_table   A, 3A, 5A, ... (odd multiples)
//   B controller     decompose_digit        digit -> (odd core, shift)
//   multiplexer      mux_select             odd core -> m*A
//   barrel shifter   barrel_shift           m*A -> m*A * 2^shift
//   central adder    csa + rca              residue + pp, k LSBs emitted
//
// A digit d is factored as odd_core * 2^shift with shift equal to the
// number of trailing zeros of d. At k = 3 this gives 2 -> (1,1),
// 4 -> (1,2), 6 -> (3,1) and every odd digit -> (d,0).

#ifndef RADIXMUL_DATAPATH_H_
#define RADIXMUL_DATAPATH_H_

#include <vector>

#include "radixmul/word.h"

namespace radixmul {

struct DigitDecomposition {
  unsigned odd_core = 0;  // 0, or odd in [1, 2^k)
  int shift = 0;          // < k

  friend bool operator==(const DigitDecomposition&,
                         const DigitDecomposition&) = default;
};

// Odd multiples {m*A : m odd, 1 <= m < 2^k}, each n + k bits wide, built
// from A with shifts and adds only.
class MultipleTable {
 public:
  MultipleTable(const Word& a, int k);

  int k() const { return k_; }
  int entry_width() const { return entry_width_; }

  // Number of stored entries, 2^(k-1).
  int size() const { return static_cast<int>(entries_.size()); }

  // m*A for odd m in [1, 2^k). SelectionError otherwise.
  const Word& multiple(unsigned m) const;

  // Ladder operation counts; the table uses no multiplier.
  int ladder_shifts() const { return ladder_shifts_; }
  int ladder_adds() const { return ladder_adds_; }

 private:
  int k_;
  int entry_width_;
  std::vector<Word> entries_;  // entries_[i] = (2i + 1) * A
  int ladder_shifts_ = 0;
  int ladder_adds_ = 0;
};

struct CsaResult {
  Word sum;
  Word carry;
};

struct RcaResult {
  Word sum;
  bool carry_out = false;
};

struct AdderStep {
  Digit emitted;
  Word residue;
};

MultipleTable build_multiple_table(const Word& a, int k);

DigitDecomposition decompose_digit(const Digit& d);

// The zero word for odd_core 0, else table.multiple(odd_core).
Word mux_select(const MultipleTable& table, unsigned odd_core);

// Single-cycle left shift; result width is width(w) + k - 1.
// ControlError if shift >= k.
Word barrel_shift(const Word& w, int shift, int k);

// 3:2 compressor. sum + 2*carry = x + y + z. WidthError unless all three
// widths match.
CsaResult csa(const Word& x, const Word& y, const Word& z);

// Bit-serial ripple addition. WidthError unless widths match.
RcaResult rca(const Word& x, const Word& y, bool carry_in);

// One cycle of the central adder: t = residue + pp through csa then rca,
// emits t mod 2^k and feeds back floor(t / 2^k) at adder_width - k bits.
// SizingError if t does not fit adder_width.
AdderStep central_adder_step(const Word& residue, const Word& pp, int k,
                             int adder_width);

}  // namespace radixmul

#endif  // RADIXMUL_DATAPATH_H_
