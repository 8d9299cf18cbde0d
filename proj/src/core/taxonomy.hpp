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

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/value.hpp"

namespace difforacle {

class Sandbox;

enum class TypeKind { Int, Float, String, Bool, List, Dict, Tuple, None, Any };

struct TypeTag {
  TypeKind kind = TypeKind::Any;

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

std::string_view to_string(TypeKind kind);
std::optional<TypeTag> parse_type_tag(std::string_view name);

// True iff `v` is acceptable where `tag` is designated. `any` accepts all.
bool value_has_type(const Value& v, TypeTag tag);

struct ProgramUnderTest {
  std::string id;
  std::string source;
  std::string entry_point;
  std::vector<TypeTag> param_types;

  std::size_t arity() const { return param_types.size(); }
};

struct Intention {
  std::string text;
  std::string put_id;
  std::string raw_response;
  bool low_confidence = false;
};

struct ReferenceVersion {
  int index = 1;
  std::string source;
  std::string entry_point;
  std::shared_ptr<const Intention> intention;
  bool compilable = false;
};

enum class InputOrigin { Llm, Manual, Replay };

struct TestInput {
  std::vector<Value> args;
  InputOrigin origin = InputOrigin::Llm;
};

struct TestCase {
  TestInput input;
  Value expected;
};

struct CoverageSet {
  std::set<std::pair<int, int>> arcs;

  std::size_t size() const { return arcs.size(); }
  // Returns the number of arcs that were not already present.
  std::size_t merge(const CoverageSet& other);
  friend bool operator==(const CoverageSet&, const CoverageSet&) = default;
};

enum class ExecStatus { Ok, Exception, Timeout, IllegalInput };

struct ExecutionResult {
  ExecStatus status = ExecStatus::Ok;
  Value value;                 // status == Ok
  std::string exception_type;  // status == Exception
  std::optional<CoverageSet> coverage;
  std::int64_t wall_time_ms = 0;

  static ExecutionResult ok(Value v, CoverageSet cov = {});
  static ExecutionResult exception(std::string type, CoverageSet cov = {});
  static ExecutionResult timeout(std::int64_t wall_ms = 0);
  static ExecutionResult illegal_input(std::string detail = {});
};

std::string_view to_string(ExecStatus status);

// The comparable output of an execution: the return value, or an exception
// value for a raising subject. Timeouts and illegal inputs have none.
std::optional<Value> observed_output(const ExecutionResult& r);

// output_equal lifted to executions; a timeout equals nothing, itself included.
bool results_equal(const ExecutionResult& a, const ExecutionResult& b);

enum class Category { FT_IA, FT_Ia, FT_ia, PT, IT };

struct Verdict {
  Category category = Category::PT;
  // PT assigned because the assertion matches the PUT's (wrong) output.
  bool masking = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline constexpr Category kAllCategories[] = {Category::FT_IA, Category::FT_Ia, Category::FT_ia,
                                              Category::PT, Category::IT};

// "FT-IA", "FT-Ia", "FT-ia", "PT", "IT".
std::string_view label(Category c);
std::optional<Category> parse_category(std::string_view text);
// label plus the "PT-masking" sub-label.
std::string display_label(const Verdict& v);

// Arity and designated-type check of a test input.
bool input_well_typed(const std::vector<Value>& args, const std::vector<TypeTag>& param_types);

inline constexpr int kDefaultTimeoutMs = 5000;

// Ground-truth classification of `test` against a buggy/patched pair.
// Throws AmbiguousVerdict if the patched program times out.
Verdict classify(const TestCase& test, const ProgramUnderTest& buggy,
                 const ProgramUnderTest& patched, Sandbox& sandbox,
                 int timeout_ms = kDefaultTimeoutMs);

// JSON forms used by outcome.json, tests.json and the C API.
Value to_json(const ExecutionResult& r, bool with_timing = true);
ExecutionResult execution_result_from_json(const Value& j);
Value to_json(const CoverageSet& c);
CoverageSet coverage_from_json(const Value& j);
Value to_json(const TestCase& t);
TestCase test_case_from_json(const Value& j);
std::string_view to_string(InputOrigin o);

}  // namespace difforacle
