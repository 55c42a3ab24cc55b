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

#include "radixmul/baseline.h"

#include <string>

#include "radixmul/errors.h"

namespace radixmul {
namespace {

void require_same_width(const Word& a, const Word& b) {
  if (a.width() != b.width()) {
    throw WidthError("operand widths differ: " + std::to_string(a.width()) +
                     " vs " + std::to_string(b.width()));
  }
}

}  // namespace

ShiftAddResult shift_add_multiply(const Word& a, const Word& b) {
  require_same_width(a, b);
  const int n = a.width();
  if (2 * n > kMaxWidth) throw WidthError("product exceeds maximum width");
  const int out = 2 * n;
  Word acc = Word::zero(out);
  ShiftAddResult result;
  for (int i = 0; i < n; ++i) {
    const Word pp = b.bit(i) ? a : Word::zero(n);
    acc = add(acc, shift_left(pp, i, out), out);
    ++result.cycles;
  }
  result.product = acc;
  return result;
}

Word oracle_multiply(const Word& a, const Word& b) {
  require_same_width(a, b);
  if (2 * a.width() > kMaxWidth) {
    throw WidthError("product exceeds maximum width");
  }
  return Word(a.value() * b.value(), 2 * a.width());
}

ComparisonReport compare(const Word& a, const Word& b, const SimConfig& cfg) {
  const Word expected = oracle_multiply(a, b);
  const ShiftAddResult classic = shift_add_multiply(a, b);
  const SimResult reformed = simulate(a, b, cfg);

  if (classic.product != expected || reformed.product != expected) {
    throw CorrectnessError(
        "product mismatch for a = " + to_hex_string(a.value()) +
        ", b = " + to_hex_string(b.value()) + ": oracle " +
        to_hex_string(expected.value()) + ", shift-and-add " +
        to_hex_string(classic.product.value()) + ", reformed " +
        to_hex_string(reformed.product.value()));
  }

  ComparisonReport report;
  report.a = a.value();
  report.b = b.value();
  report.product = expected.value();
  report.baseline_cycles = classic.cycles;
  report.reformed_cycles = reformed.cycles;
  report.reformed_digit_cycles = reformed.digit_cycles;
  report.speedup = static_cast<double>(report.baseline_cycles) /
                   static_cast<double>(report.reformed_cycles);
  return report;
}

}  // namespace radixmul
