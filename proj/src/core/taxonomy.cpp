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

#include "core/taxonomy.hpp"

#include "core/errors.hpp"
#include "sandbox/sandbox.hpp"

namespace difforacle {

std::string_view to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "float";
    case TypeKind::String: return "string";
    case TypeKind::Bool: return "bool";
    case TypeKind::List: return "list";
    case TypeKind::Dict: return "dict";
    case TypeKind::Tuple: return "tuple";
    case TypeKind::None: return "none";
    case TypeKind::Any: return "any";
  }
  return "any";
}

std::optional<TypeTag> parse_type_tag(std::string_view name) {
  for (auto k : {TypeKind::Int, TypeKind::Float, TypeKind::String, TypeKind::Bool, TypeKind::List,
                 TypeKind::Dict, TypeKind::Tuple, TypeKind::None, TypeKind::Any}) {
    if (to_string(k) == name) return TypeTag{k};
  }
  if (name == "str") return TypeTag{TypeKind::String};
  return std::nullopt;
}

bool value_has_type(const Value& v, TypeTag tag) {
  auto t = tag_of(v);
  switch (tag.kind) {
    case TypeKind::Any: return true;
    case TypeKind::Int: return is_integer(v) || t == tag::kBigInt;
    case TypeKind::Float: return v.is_number() || t == tag::kBigInt;
    case TypeKind::String: return v.is_string();
    case TypeKind::Bool: return v.is_boolean();
    case TypeKind::List: return v.is_array();
    case TypeKind::Dict: return (v.is_object() && !t) || t == tag::kDict;
    case TypeKind::Tuple: return t == tag::kTuple;
    case TypeKind::None: return v.is_null();
  }
  return false;
}

std::size_t CoverageSet::merge(const CoverageSet& other) {
  std::size_t before = arcs.size();
  arcs.insert(other.arcs.begin(), other.arcs.end());
  return arcs.size() - before;
}

ExecutionResult ExecutionResult::ok(Value v, CoverageSet cov) {
  ExecutionResult r;
  r.status = ExecStatus::Ok;
  r.value = std::move(v);
  r.coverage = std::move(cov);
  return r;
}

ExecutionResult ExecutionResult::exception(std::string type, CoverageSet cov) {
  ExecutionResult r;
  r.status = ExecStatus::Exception;
  r.exception_type = std::move(type);
  r.coverage = std::move(cov);
  return r;
}

ExecutionResult ExecutionResult::timeout(std::int64_t wall_ms) {
  ExecutionResult r;
  r.status = ExecStatus::Timeout;
  r.wall_time_ms = wall_ms;
  return r;
}

ExecutionResult ExecutionResult::illegal_input(std::string detail) {
  ExecutionResult r;
  r.status = ExecStatus::IllegalInput;
  r.exception_type = std::move(detail);
  r.coverage = CoverageSet{};
  return r;
}

std::string_view to_string(ExecStatus status) {
  switch (status) {
    case ExecStatus::Ok: return "ok";
    case ExecStatus::Exception: return "exception";
    case ExecStatus::Timeout: return "timeout";
    case ExecStatus::IllegalInput: return "illegal_input";
  }
  return "ok";
}

std::optional<Value> observed_output(const ExecutionResult& r) {
  switch (r.status) {
    case ExecStatus::Ok: return r.value;
    case ExecStatus::Exception: return make_exception(r.exception_type);
    default: return std::nullopt;
  }
}

bool results_equal(const ExecutionResult& a, const ExecutionResult& b) {
  auto x = observed_output(a);
  auto y = observed_output(b);
  return x && y && output_equal(*x, *y);
}

std::string_view label(Category c) {
  switch (c) {
    case Category::FT_IA: return "FT-IA";
    case Category::FT_Ia: return "FT-Ia";
    case Category::FT_ia: return "FT-ia";
    case Category::PT: return "PT";
    case Category::IT: return "IT";
  }
  return "PT";
}

std::optional<Category> parse_category(std::string_view text) {
  for (auto c : kAllCategories)
    if (label(c) == text) return c;
  return std::nullopt;
}

std::string display_label(const Verdict& v) {
  if (v.category == Category::PT && v.masking) return "PT-masking";
  return std::string(label(v.category));
}

bool input_well_typed(const std::vector<Value>& args, const std::vector<TypeTag>& param_types) {
  if (args.size() != param_types.size()) return false;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!value_has_type(args[i], param_types[i])) return false;
  return true;
}

Verdict classify(const TestCase& test, const ProgramUnderTest& buggy,
                 const ProgramUnderTest& patched, Sandbox& sandbox, int timeout_ms) {
  const auto& args = test.input.args;
  if (!input_well_typed(args, patched.param_types)) return {Category::IT};

  ExecutionResult truth = sandbox.execute(patched.source, patched.entry_point, args, timeout_ms);
  if (truth.status == ExecStatus::IllegalInput ||
      (truth.status == ExecStatus::Exception && truth.exception_type == "TypeError"))
    return {Category::IT};
  if (truth.status == ExecStatus::Timeout)
    throw AmbiguousVerdict("patched program timed out on " + canonical(Value(args)));

  ExecutionResult observed = sandbox.execute(buggy.source, buggy.entry_point, args, timeout_ms);

  auto truth_value = observed_output(truth);
  auto buggy_value = observed_output(observed);
  bool put_fails = !results_equal(observed, truth);
  bool asserts_truth = output_equal(test.expected, *truth_value);

  if (put_fails) {
    if (asserts_truth) return {Category::FT_IA};
    if (buggy_value && output_equal(test.expected, *buggy_value)) return {Category::PT, true};
    return {Category::FT_Ia};
  }
  if (!asserts_truth) return {Category::FT_ia};
  return {Category::PT};
}

Value to_json(const CoverageSet& c) {
  Value arcs = Value::array();
  for (const auto& [from, to] : c.arcs) arcs.push_back({from, to});
  return arcs;
}

CoverageSet coverage_from_json(const Value& j) {
  CoverageSet c;
  if (!j.is_array()) return c;
  for (const auto& arc : j)
    if (arc.is_array() && arc.size() == 2) c.arcs.emplace(arc[0].get<int>(), arc[1].get<int>());
  return c;
}

Value to_json(const ExecutionResult& r, bool with_timing) {
  Value j;
  j["status"] = std::string(to_string(r.status));
  if (r.status == ExecStatus::Ok) j["value"] = r.value;
  if (r.status == ExecStatus::Exception) j["exception_type"] = r.exception_type;
  if (r.coverage) j["coverage"] = to_json(*r.coverage);
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

ExecutionResult execution_result_from_json(const Value& j) {
  ExecutionResult r;
  std::string status = j.value("status", "ok");
  if (status == "ok") {
    r.status = ExecStatus::Ok;
    r.value = j.value("value", Value());
  } else if (status == "exception") {
    r.status = ExecStatus::Exception;
    r.exception_type = j.value("exception_type", "Exception");
  } else if (status == "timeout") {
    r.status = ExecStatus::Timeout;
  } else if (status == "illegal_input") {
    r.status = ExecStatus::IllegalInput;
  } else {
    throw SandboxError("unknown execution status '" + status + "'");
  }
  if (j.contains("coverage") && r.status != ExecStatus::Timeout)
    r.coverage = coverage_from_json(j["coverage"]);
  r.wall_time_ms = j.value("wall_time_ms", std::int64_t{0});
  return r;
}

std::string_view to_string(InputOrigin o) {
  switch (o) {
    case InputOrigin::Llm: return "llm";
    case InputOrigin::Manual: return "manual";
    case InputOrigin::Replay: return "replay";
  }
  return "llm";
}

Value to_json(const TestCase& t) {
  return Value{{"args", Value(t.input.args)}, {"expected", t.expected}};
}

TestCase test_case_from_json(const Value& j) {
  if (!j.is_object() || !j.contains("args") || !j["args"].is_array() || !j.contains("expected"))
    throw ConfigError("test case needs an 'args' array and an 'expected' value: " + j.dump());
  TestCase t;
  for (const auto& a : j["args"]) t.input.args.push_back(a);
  t.input.origin = InputOrigin::Manual;
  t.expected = j["expected"];
  return t;
}

}  // namespace difforacle
