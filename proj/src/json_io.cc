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

#include "radixmul/json_io.h"

#include <string>

#include "radixmul/errors.h"

namespace radixmul {
namespace {

std::string hex(uint128 v) { return to_hex_string(v); }

uint128 hex_field(const Json& obj, const char* key) {
  return parse_hex(obj.at(key).get<std::string>());
}

}  // namespace

Json trace_to_json(const SimResult& result) {
  const SimConfig& cfg = result.config;
  Json doc;
  doc["config"] = {
      {"n", cfg.n},
      {"k", cfg.k},
      {"adder_width", cfg.effective_adder_width()},
      {"clock_period_ns", cfg.clock_period_ns},
      {"load_delay_ns", cfg.load_delay_ns},
      {"flush_policy", std::string(to_string(cfg.flush_policy))},
  };
  doc["a"] = hex(result.a.value());
  doc["b"] = hex(result.b.value());
  doc["product"] = hex(result.product.value());
  doc["cycles"] = result.cycles;
  doc["total_time_ns"] = result.total_time_ns;
  Json trace = Json::array();
  for (const CycleRecord& r : result.trace) {
    Json row;
    row["cycle"] = r.cycle_index;
    row["digit"] = r.digit ? Json(hex(r.digit->value)) : Json(nullptr);
    row["odd_core"] = hex(r.odd_core);
    row["shift"] = r.shift;
    row["pp"] = hex(r.pp_value);
    row["residue_before"] = hex(r.residue_before);
    row["residue_after"] = hex(r.residue_after);
    row["emitted"] = hex(r.emitted);
    trace.push_back(std::move(row));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

SimResult trace_from_json(const Json& doc) {
  try {
    SimResult result;
    const Json& c = doc.at("config");
    SimConfig& cfg = result.config;
    cfg.n = c.at("n").get<int>();
    cfg.k = c.at("k").get<int>();
    cfg.adder_width = c.at("adder_width").get<int>();
    cfg.clock_period_ns = c.at("clock_period_ns").get<double>();
    cfg.load_delay_ns = c.at("load_delay_ns").get<double>();
    cfg.flush_policy =
        parse_flush_policy(c.at("flush_policy").get<std::string>());
    cfg.validate();

    result.a = Word(hex_field(doc, "a"), cfg.n);
    result.b = Word(hex_field(doc, "b"), cfg.n);
    result.product = Word(hex_field(doc, "product"), 2 * cfg.n);
    result.cycles = doc.at("cycles").get<int>();
    result.total_time_ns = doc.at("total_time_ns").get<double>();

    for (const Json& row : doc.at("trace")) {
      CycleRecord r;
      r.cycle_index = row.at("cycle").get<int>();
      const Json& digit = row.at("digit");
      if (!digit.is_null()) {
        r.digit = Digit{cfg.k, static_cast<unsigned>(
                                   parse_hex(digit.get<std::string>()))};
        ++result.digit_cycles;
      }
      r.odd_core = static_cast<unsigned>(hex_field(row, "odd_core"));
      r.shift = row.at("shift").get<int>();
      r.pp_value = hex_field(row, "pp");
      r.residue_before = hex_field(row, "residue_before");
      r.residue_after = hex_field(row, "residue_after");
      r.emitted = static_cast<unsigned>(hex_field(row, "emitted"));
      result.trace.push_back(r);
    }
    if (result.cycles != static_cast<int>(result.trace.size())) {
      throw ParseError("cycle count disagrees with trace length");
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trace document: ") + e.what());
  }
}

Json report_to_json(const ComparisonReport& report) {
  Json doc;
  doc["a"] = hex(report.a);
  doc["b"] = hex(report.b);
  doc["product"] = hex(report.product);
  doc["baseline_cycles"] = report.baseline_cycles;
  doc["reformed_cycles"] = report.reformed_cycles;
  doc["reformed_digit_cycles"] = report.reformed_digit_cycles;
  doc["speedup"] = report.speedup;
  return doc;
}

}  // namespace radixmul
