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

// JSON forms of simulation traces and comparison reports.
//
// Trace document, fields in this order:
//
//   {"config": {"n", "k", "adder_width", "clock_period_ns",
//               "load_delay_ns", "flush_policy"},
//    "a", "b", "product", "cycles", "total_time_ns",
//    "trace": [{"cycle", "digit", "odd_core", "shift", "pp",
//               "residue_before", "residue_after", "emitted"}, ...]}
//
// Multi-bit values are lowercase "0x" hex strings; "digit" is null on
// flush cycles.

#ifndef RADIXMUL_JSON_IO_H_
#define RADIXMUL_JSON_IO_H_

#include "json.hpp"
#include "radixmul/baseline.h"
#include "radixmul/engine.h"

namespace radixmul {

using Json = nlohmann::ordered_json;

Json trace_to_json(const SimResult& result);

// Inverse of trace_to_json. ParseError on schema violations.
SimResult trace_from_json(const Json& doc);

Json report_to_json(const ComparisonReport& report);

}  // namespace radixmul

#endif  // RADIXMUL_JSON_IO_H_
