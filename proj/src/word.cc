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

#include <algorithm>
#include <string>

#include "radixmul/errors.h"

namespace radixmul {
namespace {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw RangeError("word width " + std::to_string(width) +
                     " outside [1, " + std::to_string(kMaxWidth) + "]");
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Accumulates digits of `base` into a 128-bit value, rejecting overflow.
uint128 parse_digits(std::string_view text, unsigned base,
                     std::string_view what) {
  if (text.empty()) {
    throw ParseError("empty " + std::string(what) + " literal");
  }
  const uint128 max = ~uint128{0};
  uint128 v = 0;
  for (char c : text) {
    if (c == '_') continue;
    int d = hex_value(c);
    if (d < 0 || static_cast<unsigned>(d) >= base) {
      throw ParseError("invalid character '" + std::string(1, c) + "' in " +
                       std::string(what) + " literal '" + std::string(text) +
                       "'");
    }
    if (v > (max - static_cast<unsigned>(d)) / base) {
      throw RangeError(std::string(what) + " literal '" + std::string(text) +
                       "' exceeds 128 bits");
    }
    v = v * base + static_cast<unsigned>(d);
  }
  return v;
}

}  // namespace

int bit_length(uint128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(v);
  if (lo != 0) return 64 - __builtin_clzll(lo);
  return 0;
}

uint128 low_mask(int width) {
  if (width >= kMaxWidth) return ~uint128{0};
  if (width <= 0) return 0;
  return (uint128{1} << width) - 1;
}

Word::Word(uint128 value, int width) : value_(value), width_(width) {
  check_width(width);
  if (bit_length(value) > width) {
    throw RangeError("value " + to_decimal_string(value) +
                     " does not fit in " + std::to_string(width) + " bits");
  }
}

bool Word::bit(int i) const {
  if (i < 0 || i >= width_) {
    throw RangeError("bit index " + std::to_string(i) + " outside word of width " +
                     std::to_string(width_));
  }
  return ((value_ >> i) & 1) != 0;
}

Word Word::resized(int width) const { return Word(value_, width); }

Word word_from_uint(uint128 value, int width) { return Word(value, width); }

Word shift_left(const Word& w, int s, int out_width) {
  check_width(out_width);
  if (s < 0) throw RangeError("negative shift");
  if (w.value() == 0) return Word::zero(out_width);
  if (bit_length(w.value()) + s > out_width) {
    throw OverflowError(to_hex_string(w.value()) + " << " + std::to_string(s) +
                        " overflows " + std::to_string(out_width) + " bits");
  }
  return Word(w.value() << s, out_width);
}

Word add(const Word& x, const Word& y, int out_width) {
  check_width(out_width);
  const uint128 sum = x.value() + y.value();
  if (sum < x.value() || bit_length(sum) > out_width) {
    throw OverflowError(to_hex_string(x.value()) + " + " +
                        to_hex_string(y.value()) + " overflows " +
                        std::to_string(out_width) + " bits");
  }
  return Word(sum, out_width);
}

int pad_bits(int width, int k) { return (k - width % k) % k; }

std::vector<Digit> split_digits(const Word& b, int k) {
  if (k < 1) throw RangeError("digit width must be positive");
  const int count = (b.width() + k - 1) / k;
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int offset = i * k;
    const auto chunk = static_cast<unsigned>((b.value() >> offset) & low_mask(k));
    digits.push_back(Digit{k, chunk});
  }
  return digits;
}

std::string to_binary_string(const Word& w, bool full_width) {
  const int len = full_width ? w.width() : std::max(1, bit_length(w.value()));
  std::string out(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i) {
    if ((w.value() >> i) & 1) out[static_cast<std::size_t>(len - 1 - i)] = '1';
  }
  return out;
}

std::string to_hex_string(uint128 v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.push_back(kDigits[static_cast<unsigned>(v & 0xf)]);
    v >>= 4;
  } while (v != 0);
  out += "x0";
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_decimal_string(uint128 v) {
  std::string out;
  do {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  } while (v != 0);
  std::reverse(out.begin(), out.end());
  return out;
}

Word word_from_binary(std::string_view bits, int width) {
  check_width(width);
  if (bits.empty()) throw ParseError("empty binary literal");
  uint128 v = 0;
  int significant = 0;
  for (char c : bits) {
    if (c == '_') continue;
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) +
                       "' in binary literal '" + std::string(bits) + "'");
    }
    if (significant > 0 || c == '1') ++significant;
    if (significant > width) {
      throw RangeError("binary literal '" + std::string(bits) +
                       "' does not fit in " + std::to_string(width) + " bits");
    }
    v = (v << 1) | static_cast<unsigned>(c - '0');
  }
  return Word(v, width);
}

uint128 parse_hex(std::string_view text) {
  if (text.size() < 2 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw ParseError("hex literal '" + std::string(text) + "' lacks 0x prefix");
  }
  return parse_digits(text.substr(2), 16, "hex");
}

Word parse_word(std::string_view text, int width) {
  if (text.starts_with("bin:")) return word_from_binary(text.substr(4), width);
  if (text.starts_with("0x") || text.starts_with("0X")) {
    return Word(parse_hex(text), width);
  }
  return Word(parse_digits(text, 10, "decimal"), width);
}

}  // namespace radixmul
