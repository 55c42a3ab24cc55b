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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "radixmul/errors.h"

namespace radixmul {
namespace {

SimConfig config(int n, int k, FlushPolicy policy = FlushPolicy::kFullWidth) {
  SimConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.flush_policy = policy;
  return cfg;
}

// Long-multiplication oracle for the cycle state. After cycle i the
// adder has absorbed the low (i+1) digits of b, so the fed-back residue is
// a * (b mod 2^((i+1)k)) >> (i+1)k, and emission i is product bits
// [ik, (i+1)k).
struct ExpectedCycle {
  uint128 residue;
  unsigned emitted;
};

ExpectedCycle expected_cycle(uint128 a, uint128 b, int k, int i) {
  const int consumed = (i + 1) * k;
  const uint128 low_b = consumed >= 128 ? b : b & low_mask(consumed);
  const uint128 partial = a * low_b;
  const uint128 residue = consumed >= 128 ? 0 : partial >> consumed;
  const auto emitted = static_cast<unsigned>((a * b >> (i * k)) & low_mask(k));
  return {residue, emitted};
}

TEST(Simulate, WorkedExampleTrace) {
  const SimResult r =
      simulate(Word(13, 6), Word(63, 6), config(6, 3, FlushPolicy::kEarlyStop));
  EXPECT_EQ(r.product.value(), 819u);
  EXPECT_EQ(r.product.width(), 12);
  ASSERT_EQ(r.cycles, 4);
  EXPECT_EQ(r.digit_cycles, 2);

  const unsigned emitted[] = {0b011, 0b110, 0b100, 0b001};
  const uint128 residues[] = {11, 12, 1, 0};
  const uint128 pps[] = {91, 91, 0, 0};
  for (int i = 0; i < 4; ++i) {
    const CycleRecord& c = r.trace[static_cast<std::size_t>(i)];
    EXPECT_EQ(c.cycle_index, i);
    EXPECT_EQ(c.emitted, emitted[i]) << i;
    EXPECT_EQ(c.residue_after, residues[i]) << i;
    EXPECT_EQ(c.pp_value, pps[i]) << i;
    EXPECT_EQ(c.digit.has_value(), i < 2) << i;
  }
  EXPECT_EQ(r.trace[0].odd_core, 7u);
  EXPECT_EQ(r.trace[0].shift, 0);
  EXPECT_EQ(r.ladder_shifts, 3);
  EXPECT_EQ(r.ladder_adds, 3);
}

TEST(Simulate, ZeroMultiplier) {
  const SimResult full = simulate(Word(0xabcd, 16), Word(0, 16), config(16, 3));
  EXPECT_EQ(full.product.value(), 0u);
  EXPECT_EQ(full.cycles, 11);
  const SimResult early = simulate(Word(0xabcd, 16), Word(0, 16),
                                   config(16, 3, FlushPolicy::kEarlyStop));
  EXPECT_EQ(early.product.value(), 0u);
  EXPECT_EQ(early.cycles, 6);
}

TEST(Simulate, AllOnesSixteenBit) {
  const Word ones(0xffff, 16);
  const SimResult full = simulate(ones, ones, config(16, 3));
  EXPECT_EQ(full.product.value(), 4294836225u);
  EXPECT_EQ(full.cycles, 11);
  EXPECT_EQ(full.digit_cycles, 6);
  EXPECT_DOUBLE_EQ(full.total_time_ns, 470.0);

  const SimResult early =
      simulate(ones, ones, config(16, 3, FlushPolicy::kEarlyStop));
  EXPECT_EQ(early.cycles, 11);
  EXPECT_EQ(early.digit_cycles, 6);
}

TEST(Simulate, ConfigErrors) {
  EXPECT_THROW(simulate(Word(1, 8), Word(1, 16), config(16, 3)), ConfigError);
  EXPECT_THROW(simulate(Word(1, 4), Word(1, 4), config(4, 5)), ConfigError);
  EXPECT_THROW(simulate(Word(1, 4), Word(1, 4), config(4, 0)), ConfigError);
  SimConfig narrow = config(16, 3);
  narrow.adder_width = 20;
  EXPECT_THROW(simulate(Word(1, 16), Word(1, 16), narrow), ConfigError);
  SimConfig clock = config(8, 3);
  clock.clock_period_ns = 0;
  EXPECT_THROW(clock.validate(), ConfigError);
  SimConfig load = config(8, 3);
  load.load_delay_ns = -1;
  EXPECT_THROW(load.validate(), ConfigError);
  EXPECT_THROW(config(65, 3).validate(), ConfigError);
}

TEST(SimConfig, DefaultAdderWidth) {
  EXPECT_EQ(SimConfig{}.effective_adder_width(), 25);
  EXPECT_EQ(config(6, 3).effective_adder_width(), 15);
}

TEST(FlushPolicyText, RoundTrip) {
  for (FlushPolicy p : {FlushPolicy::kFullWidth, FlushPolicy::kEarlyStop}) {
    EXPECT_EQ(parse_flush_policy(to_string(p)), p);
  }
  EXPECT_THROW(parse_flush_policy("lazy"), ParseError);
}

TEST(AssembleProduct, Placement) {
  auto records = [](std::vector<unsigned> emitted) {
    std::vector<CycleRecord> out;
    for (unsigned e : emitted) {
      CycleRecord r;
      r.emitted = e;
      out.push_back(r);
    }
    return out;
  };
  EXPECT_EQ(assemble_product(records({3, 6, 4, 1}), 6, 3).value(), 819u);
  EXPECT_EQ(assemble_product(records({0, 0, 0, 0}), 6, 3).value(), 0u);
  EXPECT_EQ(assemble_product(records({5}), 3, 3).value(), 5u);
  // 11 emissions of 3 bits into 32 bits: the top emission starts at bit
  // 30, so only its two low bits fit.
  EXPECT_THROW(assemble_product(records({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4}), 16,
                                3),
               SizingError);
  EXPECT_EQ(assemble_product(records({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3}), 16, 3)
                .value(),
            uint128{3} << 30);
}

TEST(CycleCountModel, Examples) {
  const Word ones(0xffff, 16);
  const Word zero(0, 16);
  EXPECT_EQ(cycle_count_model(zero, zero, config(16, 3)), 11);
  EXPECT_EQ(cycle_count_model(ones, ones, config(16, 3)), 11);
  EXPECT_EQ(
      cycle_count_model(ones, ones, config(16, 3, FlushPolicy::kEarlyStop)),
      11);
  EXPECT_EQ(
      cycle_count_model(ones, zero, config(16, 3, FlushPolicy::kEarlyStop)), 6);
  EXPECT_EQ(digit_cycle_count(16, 3), 6);
  EXPECT_EQ(digit_cycle_count(6, 3), 2);
}

// Exhaustive over small n and every k, both policies: product, trace
// against the long-multiplication oracle, conservation, residue bound and
// the cycle model.
TEST(SimulateProperty, ExhaustiveSmallWidths) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= std::min(4, n); ++k) {
      for (FlushPolicy policy :
           {FlushPolicy::kFullWidth, FlushPolicy::kEarlyStop}) {
        const SimConfig cfg = config(n, k, policy);
        for (uint128 a = 0; a < (uint128{1} << n); ++a) {
          for (uint128 b = 0; b < (uint128{1} << n); ++b) {
            const Word wa(a, n), wb(b, n);
            const SimResult r = simulate(wa, wb, cfg);
            ASSERT_EQ(r.product.value(), a * b);
            ASSERT_TRUE(check_conservation(r.trace, k));
            ASSERT_EQ(r.cycles, cycle_count_model(wa, wb, cfg));
            ASSERT_EQ(r.digit_cycles, (n + k - 1) / k);
            for (int i = 0; i < r.cycles; ++i) {
              const CycleRecord& c = r.trace[static_cast<std::size_t>(i)];
              const ExpectedCycle e = expected_cycle(a, b, k, i);
              ASSERT_EQ(c.residue_after, e.residue);
              ASSERT_EQ(c.emitted, e.emitted);
              ASSERT_LT(c.residue_after, uint128{1} << (n + 1));
            }
          }
        }
      }
    }
  }
}

TEST(SimulateProperty, RandomWideOperands) {
  std::mt19937_64 rng(2024);
  for (int n : {16, 24, 32, 48, 64}) {
    for (int k = 1; k <= 8; ++k) {
      for (FlushPolicy policy :
           {FlushPolicy::kFullWidth, FlushPolicy::kEarlyStop}) {
        const SimConfig cfg = config(n, k, policy);
        for (int trial = 0; trial < 200; ++trial) {
          const uint128 a = rng() & low_mask(n);
          const uint128 b = rng() & low_mask(n);
          const Word wa(a, n), wb(b, n);
          const SimResult r = simulate(wa, wb, cfg);
          ASSERT_EQ(r.product.value(), a * b) << "n=" << n << " k=" << k;
          ASSERT_TRUE(check_conservation(r.trace, k));
          ASSERT_EQ(r.cycles, cycle_count_model(wa, wb, cfg));
          ASSERT_DOUBLE_EQ(r.total_time_ns,
                           cfg.load_delay_ns + r.cycles * cfg.clock_period_ns);
        }
      }
    }
  }
}

// k = 1 degenerates to classical shift-and-add selection: digit 1 picks A
// unshifted, digit 0 the zero line.
TEST(SimulateProperty, SingleBitDigits) {
  const Word a(0x5a, 8), b(0xb3, 8);
  const SimResult r = simulate(a, b, config(8, 1));
  for (int i = 0; i < 8; ++i) {
    const CycleRecord& c = r.trace[static_cast<std::size_t>(i)];
    ASSERT_TRUE(c.digit.has_value());
    EXPECT_EQ(c.shift, 0);
    EXPECT_EQ(c.pp_value, b.bit(i) ? a.value() : 0u);
    EXPECT_EQ(c.odd_core, b.bit(i) ? 1u : 0u);
  }
  EXPECT_EQ(r.product.value(), 0x5au * 0xb3u);
}

TEST(CheckConservation, DetectsCorruption) {
  SimResult r = simulate(Word(13, 6), Word(63, 6), config(6, 3));
  EXPECT_TRUE(check_conservation(r.trace, 3));
  r.trace[1].residue_after += 1;
  EXPECT_FALSE(check_conservation(r.trace, 3));
}

}  // namespace
}  // namespace radixmul
