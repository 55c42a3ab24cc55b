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

#include "radixmul/datapath.h"

#include <bit>
#include <string>

#include "radixmul/errors.h"

namespace radixmul {
namespace {

void require_same_width(const Word& x, const Word& y, const char* block) {
  if (x.width() != y.width()) {
    throw WidthError(std::string(block) + " operand widths differ: " +
                     std::to_string(x.width()) + " vs " +
                     std::to_string(y.width()));
  }
}

}  // namespace

MultipleTable::MultipleTable(const Word& a, int k)
    : k_(k), entry_width_(a.width() + k) {
  if (k < 1 || k > 16) throw ConfigError("digit width k must be in [1, 16]");
  const Word base = a.resized(entry_width_);
  entries_.reserve(std::size_t{1} << (k - 1));
  entries_.push_back(base);
  // Odd m > 1: (m - 1)*A is an even multiple, reached by shifting the
  // already-built odd multiple (m - 1) >> tz; then one add of A.
  for (unsigned m = 3; m < (1u << k); m += 2) {
    const unsigned even = m - 1;
    const int tz = std::countr_zero(even);
    const Word& source = entries_[(even >> tz) / 2];
    const Word even_multiple = shift_left(source, tz, entry_width_);
    ++ladder_shifts_;
    entries_.push_back(add(even_multiple, base, entry_width_));
    ++ladder_adds_;
  }
}

const Word& MultipleTable::multiple(unsigned m) const {
  if (m % 2 == 0 || m >= (1u << k_)) {
    throw SelectionError("no odd multiple " + std::to_string(m) +
                         " in table for k = " + std::to_string(k_));
  }
  return entries_[m / 2];
}

MultipleTable build_multiple_table(const Word& a, int k) {
  return MultipleTable(a, k);
}

DigitDecomposition decompose_digit(const Digit& d) {
  if (d.value == 0) return {};
  const int tz = std::countr_zero(d.value);
  return {d.value >> tz, tz};
}

Word mux_select(const MultipleTable& table, unsigned odd_core) {
  if (odd_core == 0) return Word::zero(table.entry_width());
  return table.multiple(odd_core);
}

Word barrel_shift(const Word& w, int shift, int k) {
  if (shift < 0 || shift >= k) {
    throw ControlError("barrel shift " + std::to_string(shift) +
                       " outside [0, " + std::to_string(k) + ")");
  }
  return shift_left(w, shift, w.width() + k - 1);
}

CsaResult csa(const Word& x, const Word& y, const Word& z) {
  require_same_width(x, y, "csa");
  require_same_width(x, z, "csa");
  const uint128 a = x.value(), b = y.value(), c = z.value();
  const uint128 sum = a ^ b ^ c;
  const uint128 carry = (a & b) | (a & c) | (b & c);
  return {Word(sum, x.width()), Word(carry, x.width())};
}

RcaResult rca(const Word& x, const Word& y, bool carry_in) {
  require_same_width(x, y, "rca");
  uint128 sum = 0;
  bool carry = carry_in;
  for (int i = 0; i < x.width(); ++i) {
    const bool a = x.bit(i);
    const bool b = y.bit(i);
    if (a ^ b ^ carry) sum |= uint128{1} << i;
    carry = (a && b) || (a && carry) || (b && carry);
  }
  return {Word(sum, x.width()), carry};
}

AdderStep central_adder_step(const Word& residue, const Word& pp, int k,
                             int adder_width) {
  if (k < 1 || adder_width <= k) {
    throw ConfigError("adder width must exceed k");
  }
  auto widen = [&](const Word& w, const char* name) {
    if (bit_length(w.value()) > adder_width) {
      throw SizingError(std::string(name) + " " + to_hex_string(w.value()) +
                        " exceeds adder width " + std::to_string(adder_width));
    }
    return Word(w.value(), adder_width);
  };
  const Word r = widen(residue, "residue");
  const Word p = widen(pp, "partial product");

  const CsaResult stage1 = csa(r, p, Word::zero(adder_width));
  if (stage1.carry.bit(adder_width - 1)) {
    throw SizingError("central adder overflow at width " +
                      std::to_string(adder_width));
  }
  const Word carry_shifted(stage1.carry.value() << 1, adder_width);
  const RcaResult stage2 = rca(stage1.sum, carry_shifted, false);
  if (stage2.carry_out) {
    throw SizingError("central adder overflow at width " +
                      std::to_string(adder_width));
  }

  const uint128 total = stage2.sum.value();
  const auto emitted = static_cast<unsigned>(total & low_mask(k));
  return {Digit{k, emitted}, Word(total >> k, adder_width - k)};
}

}  // namespace radixmul
