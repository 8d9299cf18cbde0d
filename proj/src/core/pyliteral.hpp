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
#include <vector>

#include "core/value.hpp"

namespace difforacle {

// Parses one Python literal expression (numbers, strings, True/False/None,
// lists, tuples, dicts) into a Value. Trailing text other than whitespace is
// rejected.
std::optional<Value> parse_python_literal(std::string_view text);

struct ParsedCall {
  std::string callee;
  std::vector<Value> args;
  std::size_t end = 0;  // offset one past the closing parenthesis
};

// Finds the first call `name(<literal>, ...)` in `text` whose callee is
// `entry_point` (or any identifier when `entry_point` is empty) and whose
// arguments are all literals.
std::optional<ParsedCall> find_call(std::string_view text, std::string_view entry_point);

// Parses the literal that starts at `text[pos]`, advancing `pos` past it.
std::optional<Value> parse_literal_prefix(std::string_view text, std::size_t& pos);

}  // namespace difforacle
