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

#include "radixmul/word.h"

#include <random>

#include "gtest/gtest.h"
#include "radixmul/errors.h"

namespace radixmul {
namespace {

uint128 random_value(std::mt19937_64& rng, int width) {
  const uint128 v = (uint128{rng()} << 64) | rng();
  return v & low_mask(width);
}

TEST(Word, FromUint) {
  const Word zero = word_from_uint(0, 8);
  EXPECT_EQ(zero.width(), 8);
  EXPECT_EQ(zero.value(), 0u);

  // A = 001101 from the 6x6 worked example.
  const Word a = word_from_uint(13, 6);
  const bool expected[] = {true, false, true, true, false, false};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(a.bit(i), expected[i]) << i;

  EXPECT_THROW(word_from_uint(256, 8), RangeError);
  EXPECT_NO_THROW(word_from_uint(255, 8));
  EXPECT_THROW(word_from_uint(1, 0), RangeError);
  EXPECT_THROW(word_from_uint(1, 129), RangeError);
  EXPECT_NO_THROW(word_from_uint(~uint128{0}, 128));
  EXPECT_THROW(a.bit(6), RangeError);
}

TEST(Word, ShiftLeft) {
  EXPECT_EQ(shift_left(Word(13, 6), 1, 8).value(), 26u);
  EXPECT_EQ(shift_left(Word(13, 6), 2, 8).value(), 52u);
  const Word w(0x2d, 7);
  EXPECT_EQ(shift_left(w, 0, w.width()), w);
  EXPECT_THROW(shift_left(Word(13, 6), 4, 7), OverflowError);
  EXPECT_EQ(shift_left(Word(0, 4), 200, 4).value(), 0u);
  EXPECT_EQ(shift_left(Word(1, 1), 127, 128).value(), uint128{1} << 127);
}

TEST(Word, Add) {
  const Word y(77, 8);
  EXPECT_EQ(add(Word(0, 8), y, 8), y);
  EXPECT_EQ(add(Word(26, 8), Word(13, 8), 8).value(), 39u);
  EXPECT_EQ(add(Word(91, 8), Word(11, 8), 8).value(), 102u);
  EXPECT_THROW(add(Word(200, 8), Word(56, 8), 8), OverflowError);
  EXPECT_THROW(add(Word(~uint128{0}, 128), Word(1, 1), 128), OverflowError);
}

TEST(Word, SplitDigits) {
  const auto sevens = split_digits(Word(0b111111, 6), 3);
  ASSERT_EQ(sevens.size(), 2u);
  EXPECT_EQ(sevens[0].value, 7u);
  EXPECT_EQ(sevens[1].value, 7u);

  EXPECT_EQ(split_digits(Word(0xbeef, 16), 3).size(), 6u);
  EXPECT_EQ(pad_bits(16, 3), 2);
  EXPECT_EQ(pad_bits(6, 3), 0);

  for (const Digit& d : split_digits(Word(0, 6), 3)) EXPECT_EQ(d.value, 0u);
  EXPECT_THROW(split_digits(Word(0, 6), 0), RangeError);
}

TEST(WordProperty, Recomposition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 128);
    const int k = 1 + static_cast<int>(rng() % 8);
    const Word b(random_value(rng, width), width);
    const auto digits = split_digits(b, k);
    ASSERT_EQ(digits.size(), static_cast<std::size_t>((width + k - 1) / k));
    uint128 sum = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      ASSERT_LT(digits[i].value, 1u << k);
      sum += uint128{digits[i].value} << (i * k);
    }
    ASSERT_EQ(sum, b.value()) << "width " << width << " k " << k;
  }
}

TEST(WordProperty, ShiftAndAddMatchIntegers) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5000; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 64);
    const Word x(random_value(rng, width), width);
    const Word y(random_value(rng, width), width);
    const int s = static_cast<int>(rng() % 64);
    const int out = 1 + static_cast<int>(rng() % 128);

    const uint128 shifted = x.value() << s;
    if (bit_length(x.value()) + s <= out || x.value() == 0) {
      ASSERT_EQ(shift_left(x, s, out).value(), shifted);
    } else {
      ASSERT_THROW(shift_left(x, s, out), OverflowError);
    }

    const uint128 sum = x.value() + y.value();
    if (bit_length(sum) <= out) {
      ASSERT_EQ(add(x, y, out).value(), sum);
    } else {
      ASSERT_THROW(add(x, y, out), OverflowError);
    }
  }
}

TEST(WordText, Parse) {
  EXPECT_EQ(parse_word("bin:001101", 6).value(), 13u);
  EXPECT_EQ(parse_word("bin:1101", 6).value(), 13u);
  EXPECT_EQ(parse_word("0xFFFF", 16).value(), 65535u);
  EXPECT_EQ(parse_word("0xffff", 16).value(), 65535u);
  EXPECT_EQ(parse_word("819", 12).value(), 819u);
  // 14 printed characters zero-extended into a 16-bit operand.
  EXPECT_EQ(parse_word("bin:01010101010101", 16).value(), 0x1555u);
  EXPECT_EQ(parse_word("bin:0000000001", 2).value(), 1u);

  EXPECT_THROW(parse_word("bin:102", 6), ParseError);
  EXPECT_THROW(parse_word("12a", 8), ParseError);
  EXPECT_THROW(parse_word("0x", 8), ParseError);
  EXPECT_THROW(parse_word("", 8), ParseError);
  EXPECT_THROW(parse_word("0x100", 8), RangeError);
  EXPECT_THROW(parse_word("bin:1000000", 6), RangeError);
  EXPECT_THROW(parse_word("256", 8), RangeError);
  EXPECT_THROW(parse_word("340282366920938463463374607431768211456", 128),
               RangeError);
  EXPECT_EQ(parse_word("340282366920938463463374607431768211455", 128).value(),
            ~uint128{0});
}

TEST(WordText, Format) {
  EXPECT_EQ(to_binary_string(Word(819, 12)), "1100110011");
  EXPECT_EQ(to_binary_string(Word(819, 12), true), "001100110011");
  EXPECT_EQ(to_binary_string(Word(0, 5)), "0");
  EXPECT_EQ(to_hex_string(0), "0x0");
  EXPECT_EQ(to_hex_string(0xabcdef), "0xabcdef");
  EXPECT_EQ(to_hex_string(~uint128{0}), "0xffffffffffffffffffffffffffffffff");
  EXPECT_EQ(to_decimal_string(4294836225u), "4294836225");
  EXPECT_EQ(to_decimal_string(~uint128{0}),
            "340282366920938463463374607431768211455");
  EXPECT_EQ(parse_hex(to_hex_string(0x123456789abcdefULL)),
            uint128{0x123456789abcdefULL});
}

}  // namespace
}  // namespace radixmul
