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

// Fixed-width unsigned bit vectors.
//
// A Word carries its width on every value. Bit 0 is the LSB (the rightmost
// bit of a printed binary literal). Nothing in this file wraps silently:
// a result that does not fit the requested width is an error.

#ifndef RADIXMUL_WORD_H_
#define RADIXMUL_WORD_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace radixmul {

using uint128 = unsigned __int128;

inline constexpr int kMaxWidth = 128;

// Number of significant bits in `v` (0 for v == 0).
int bit_length(uint128 v);

// All-ones mask of `width` bits, 0 <= width <= kMaxWidth.
uint128 low_mask(int width);

class Word {
 public:
  // A one-bit zero.
  Word() = default;

  // Throws RangeError if value >= 2^width or width is outside [1, kMaxWidth].
  Word(uint128 value, int width);

  static Word zero(int width) { return Word(0, width); }

  int width() const { return width_; }
  uint128 value() const { return value_; }

  // Bit i, 0 <= i < width. Throws RangeError otherwise.
  bool bit(int i) const;

  // Same value at a different width; RangeError if it does not fit.
  Word resized(int width) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  uint128 value_ = 0;
  int width_ = 1;
};

// One k-bit chunk of the multiplier.
struct Digit {
  int k = 1;
  unsigned value = 0;

  friend bool operator==(const Digit&, const Digit&) = default;
};

Word word_from_uint(uint128 value, int width);

// value(w) * 2^s at out_width. OverflowError if it does not fit.
Word shift_left(const Word& w, int s, int out_width);

// Exact sum at out_width. OverflowError if it does not fit.
Word add(const Word& x, const Word& y, int out_width);

// Splits b into ceil(width/k) digits, element 0 holding the k LSBs. The
// top digit is zero-padded at the MSB end when k does not divide the width.
std::vector<Digit> split_digits(const Word& b, int k);

// Number of zero bits appended at the MSB end by split_digits.
int pad_bits(int width, int k);

// Textual forms. Binary is printed MSB-first. With `full_width` the
// binary form has exactly width() characters, otherwise leading zeros are
// dropped ("0" for zero).
std::string to_binary_string(const Word& w, bool full_width = false);
std::string to_hex_string(uint128 v);  // lowercase with "0x" prefix
std::string to_decimal_string(uint128 v);

// MSB-first '0'/'1' string into a word of `width` bits. Shorter strings
// are zero-extended; longer ones must carry only zeros in the excess.
Word word_from_binary(std::string_view bits, int width);

// Operand literal: "bin:" + binary, "0x" + hex, or decimal.
// ParseError on malformed text, RangeError if the value exceeds width.
Word parse_word(std::string_view text, int width);

// Parses a "0x"-prefixed hex string into a raw value (no width check).
uint128 parse_hex(std::string_view text);

}  // namespace radixmul

#endif  // RADIXMUL_WORD_H_
