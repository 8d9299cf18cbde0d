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

#include "testgen/outcome.hpp"

#include "core/errors.hpp"

namespace difforacle {

std::string_view to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Found: return "found";
    case PipelineStatus::NotFoundAttemptsExhausted: return "not_found_attempts_exhausted";
    case PipelineStatus::NotFoundCoverageSaturated: return "not_found_coverage_saturated";
    case PipelineStatus::NotFoundInputsExhausted: return "not_found_inputs_exhausted";
    case PipelineStatus::NotFound: return "not_found";
  }
  return "not_found";
}

PipelineStatus parse_pipeline_status(std::string_view s) {
  for (auto st : {PipelineStatus::Found, PipelineStatus::NotFoundAttemptsExhausted,
                  PipelineStatus::NotFoundCoverageSaturated,
                  PipelineStatus::NotFoundInputsExhausted, PipelineStatus::NotFound})
    if (to_string(st) == s) return st;
  throw ConfigError("unknown pipeline status '" + std::string(s) + "'");
}

std::string_view to_string(Disposition d) {
  switch (d) {
    case Disposition::ConsensusDiff: return "consensus_diff";
    case Disposition::ConsensusSame: return "consensus_same";
    case Disposition::NoConsensus: return "no_consensus";
    case Disposition::Illegal: return "illegal";
    case Disposition::Timeout: return "timeout";
  }
  return "no_consensus";
}

Disposition parse_disposition(std::string_view s) {
  for (auto d : {Disposition::ConsensusDiff, Disposition::ConsensusSame, Disposition::NoConsensus,
                 Disposition::Illegal, Disposition::Timeout})
    if (to_string(d) == s) return d;
  throw ConfigError("unknown disposition '" + std::string(s) + "'");
}

std::string assertion_line(const std::string& entry_point, const TestCase& tc) {
  std::string call = entry_point + "(";
  for (std::size_t i = 0; i < tc.input.args.size(); ++i) {
    if (i) call += ", ";
    call += to_python_literal(tc.input.args[i]);
  }
  return call + ") == " + to_python_literal(tc.expected);
}

Value to_json(const PipelineOutcome& o, bool with_timing) {
  Value j;
  j["technique"] = o.technique;
  j["put_id"] = o.put_id;
  j["entry_point"] = o.entry_point;
  j["status"] = std::string(to_string(o.status));
  if (o.test_case) {
    Value tc = to_json(*o.test_case);
    tc["assertion"] = assertion_line(o.entry_point, *o.test_case);
    j["test_case"] = tc;
  } else {
    j["test_case"] = nullptr;
  }
  if (!o.disposition.empty()) j["disposition"] = o.disposition;
  j["details"] = o.details;
  Value trace = Value::array();
  for (const auto& r : o.trace) {
    Value rec;
    rec["input"] = Value(r.input.args);
    rec["origin"] = std::string(to_string(r.input.origin));
    Value refs = Value::array();
    for (const auto& e : r.ref_outputs) refs.push_back(to_json(e, with_timing));
    rec["ref_outputs"] = refs;
    rec["put_output"] = r.put_output ? to_json(*r.put_output, with_timing) : Value();
    rec["disposition"] = std::string(to_string(r.disposition));
    rec["counted"] = r.counted;
    rec["coverage_arcs"] = r.coverage_arcs;
    trace.push_back(std::move(rec));
  }
  j["trace"] = trace;
  return j;
}

PipelineOutcome pipeline_outcome_from_json(const Value& j) {
  PipelineOutcome o;
  o.technique = j.value("technique", std::string("diffprompt"));
  o.put_id = j.value("put_id", std::string());
  o.entry_point = j.value("entry_point", std::string());
  o.status = parse_pipeline_status(j.at("status").get<std::string>());
  if (j.contains("test_case") && j["test_case"].is_object())
    o.test_case = test_case_from_json(j["test_case"]);
  o.disposition = j.value("disposition", std::string());
  o.details = j.value("details", Value::object());
  for (const auto& rec : j.value("trace", Value::array())) {
    AttemptRecord r;
    for (const auto& a : rec.at("input")) r.input.args.push_back(a);
    std::string origin = rec.value("origin", std::string("llm"));
    r.input.origin = origin == "manual"   ? InputOrigin::Manual
                     : origin == "replay" ? InputOrigin::Replay
                                          : InputOrigin::Llm;
    for (const auto& e : rec.value("ref_outputs", Value::array()))
      r.ref_outputs.push_back(execution_result_from_json(e));
    if (rec.contains("put_output") && rec["put_output"].is_object())
      r.put_output = execution_result_from_json(rec["put_output"]);
    r.disposition = parse_disposition(rec.at("disposition").get<std::string>());
    r.counted = rec.value("counted", false);
    r.coverage_arcs = rec.value("coverage_arcs", std::size_t{0});
    o.trace.push_back(std::move(r));
  }
  return o;
}

bool same_outcome(const PipelineOutcome& a, const PipelineOutcome& b) {
  return to_json(a, false) == to_json(b, false);
}

}  // namespace difforacle
