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

#include "radixmul/verify.h"

#include <algorithm>
#include <random>
#include <thread>

#include "radixmul/baseline.h"
#include "radixmul/errors.h"

namespace radixmul {

std::optional<std::string> check_pair(const OperandPair& pair,
                                      const SimConfig& cfg) {
  try {
    const Word a(pair.a, cfg.n);
    const Word b(pair.b, cfg.n);
    const Word expected = oracle_multiply(a, b);
    const ShiftAddResult classic = shift_add_multiply(a, b);
    const SimResult sim = simulate(a, b, cfg);
    if (classic.product != expected) {
      return "shift-and-add product " + to_hex_string(classic.product.value()) +
             " != oracle " + to_hex_string(expected.value());
    }
    if (sim.product != expected) {
      return "reformed product " + to_hex_string(sim.product.value()) +
             " != oracle " + to_hex_string(expected.value());
    }
    if (!check_conservation(sim.trace, cfg.k)) {
      return std::string("per-cycle conservation violated");
    }
    const int predicted = cycle_count_model(a, b, cfg);
    if (predicted != sim.cycles) {
      return "cycle model predicts " + std::to_string(predicted) +
             ", simulation took " + std::to_string(sim.cycles);
    }
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::vector<OperandPair> exhaustive_pairs(int n) {
  if (n < 1 || n > 10) {
    throw ConfigError("exhaustive verification needs 1 <= n <= 10");
  }
  const uint128 limit = uint128{1} << n;
  std::vector<OperandPair> pairs;
  pairs.reserve(static_cast<std::size_t>(limit * limit));
  for (uint128 a = 0; a < limit; ++a) {
    for (uint128 b = 0; b < limit; ++b) pairs.push_back({a, b});
  }
  return pairs;
}

std::vector<OperandPair> random_pairs(int n, std::uint64_t count,
                                      std::uint64_t seed) {
  if (n < 1 || n > 64) throw ConfigError("random verification needs n <= 64");
  std::mt19937_64 rng(seed);
  const std::uint64_t max =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(0, max);
  std::vector<OperandPair> pairs;
  pairs.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t a = dist(rng);
    const std::uint64_t b = dist(rng);
    pairs.push_back({a, b});
  }
  return pairs;
}

VerifySummary verify_pairs(const std::vector<OperandPair>& pairs,
                           const SimConfig& cfg, unsigned jobs) {
  cfg.validate();
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(
      jobs, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size())));

  std::vector<VerifySummary> partial(jobs);
  const std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
  auto work = [&](unsigned w) {
    VerifySummary& s = partial[w];
    const std::size_t begin = std::min(pairs.size(), w * chunk);
    const std::size_t end = std::min(pairs.size(), begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      ++s.pairs;
      if (auto reason = check_pair(pairs[i], cfg)) {
        ++s.failures;
        if (!s.first_failure) s.first_failure = {i, pairs[i], *reason};
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 1; w < jobs; ++w) workers.emplace_back(work, w);
    work(0);
  }

  // Chunks are contiguous, so the first worker with a failure holds the
  // earliest one.
  VerifySummary total;
  for (const VerifySummary& s : partial) {
    total.pairs += s.pairs;
    total.failures += s.failures;
    if (!total.first_failure && s.first_failure) {
      total.first_failure = s.first_failure;
    }
  }
  return total;
}

std::vector<SweepRow> sweep(int n, int k_lo, int k_hi) {
  if (k_lo < 1 || k_hi < k_lo || k_hi > std::min(8, n)) {
    throw ConfigError("k range " + std::to_string(k_lo) + ".." +
                      std::to_string(k_hi) + " outside [1, min(8, n)]");
  }
  std::vector<SweepRow> rows;
  const Word zero = Word::zero(n);
  const Word ones(low_mask(n), n);
  for (int k = k_lo; k <= k_hi; ++k) {
    SimConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.validate();
    SweepRow row;
    row.k = k;
    row.digit_cycles = digit_cycle_count(n, k);
    cfg.flush_policy = FlushPolicy::kFullWidth;
    row.full_width_cycles = cycle_count_model(ones, ones, cfg);
    cfg.flush_policy = FlushPolicy::kEarlyStop;
    row.early_stop_min = cycle_count_model(ones, zero, cfg);
    row.early_stop_max = cycle_count_model(ones, ones, cfg);
    row.adder_width = cfg.effective_adder_width();
    row.table_size = 1 << (k - 1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace radixmul
