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
#include <string_view>

#include "json.hpp"

namespace difforacle {

// Subject values travel as JSON. Python types without a JSON counterpart use a
// sidecar tag object {"__t": <tag>, "v": <payload>}:
//   tuple      v = array of values
//   dict       v = array of [key, value] pairs (non-string keys)
//   bigint     v = decimal string (integers outside 64 bits)
//   repr       v = repr() string of a non-serializable return value
//   exception  v = exception type name, when a subject raised
using Value = nlohmann::json;

inline constexpr double kNumericTolerance = 1e-9;

namespace tag {
inline constexpr std::string_view kTuple = "tuple";
inline constexpr std::string_view kDict = "dict";
inline constexpr std::string_view kBigInt = "bigint";
inline constexpr std::string_view kRepr = "repr";
inline constexpr std::string_view kException = "exception";
}  // namespace tag

Value make_tagged(std::string_view tag, Value payload);
Value make_tuple(Value elements);
Value make_exception(std::string type_name);

// Tag name if `v` is a sidecar-tagged object.
std::optional<std::string> tag_of(const Value& v);

bool is_integer(const Value& v);

// Structural equality. Integers compare exactly; as soon as either side is a
// non-integer number the comparison is |a - b| <= 1e-9. Tagged values compare
// by tag and payload; exceptions by type name.
bool output_equal(const Value& a, const Value& b);

// Canonical single-line text (sorted object keys); used for dedup keys.
std::string canonical(const Value& v);

// Python source rendering: [1, 2], (1,), 'x', True, None, {'a': 1}.
std::string to_python_literal(const Value& v);

}  // namespace difforacle
