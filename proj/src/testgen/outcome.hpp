// Copyright 2026 The difforacle Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/taxonomy.hpp"

namespace difforacle {

enum class PipelineStatus {
  Found,
  NotFoundAttemptsExhausted,
  NotFoundCoverageSaturated,
  NotFoundInputsExhausted,
  // Direct-prompting baselines that decline to produce a test.
  NotFound,
};

std::string_view to_string(PipelineStatus s);
PipelineStatus parse_pipeline_status(std::string_view s);

enum class Disposition { ConsensusDiff, ConsensusSame, NoConsensus, Illegal, Timeout };

std::string_view to_string(Disposition d);
Disposition parse_disposition(std::string_view s);

struct AttemptRecord {
  TestInput input;
  std::vector<ExecutionResult> ref_outputs;
  std::optional<ExecutionResult> put_output;
  Disposition disposition = Disposition::NoConsensus;
  bool counted = false;            // consumed one of the k attempts
  std::size_t coverage_arcs = 0;   // accumulated PUT arcs after this record
};

struct PipelineOutcome {
  std::string technique = "diffprompt";
  std::string put_id;
  std::string entry_point;
  PipelineStatus status = PipelineStatus::NotFoundAttemptsExhausted;
  std::optional<TestCase> test_case;  // iff status == Found
  std::vector<AttemptRecord> trace;
  // Technique-specific notes: baseline disposition, intention text, counters.
  std::string disposition;
  Value details = Value::object();

  bool found() const { return status == PipelineStatus::Found; }
};

// "gcd(12, 20) == 4"
std::string assertion_line(const std::string& entry_point, const TestCase& tc);

// outcome.json body. Timings are left out when `with_timing` is false so
// replayed runs serialize identically.
Value to_json(const PipelineOutcome& o, bool with_timing = true);
PipelineOutcome pipeline_outcome_from_json(const Value& j);

// Equality of everything but wall-clock timings.
bool same_outcome(const PipelineOutcome& a, const PipelineOutcome& b);

}  // namespace difforacle
