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

#include <string_view>
#include <vector>

#include "core/taxonomy.hpp"
#include "llm/context.hpp"

namespace difforacle {

struct ParsedInputs {
  std::vector<TestInput> inputs;
  int warnings = 0;  // non-empty lines that did not parse
};

// Accepts a JSON array of argument arrays (whole reply or a fenced block) or
// one call expression per line, e.g. gcd(12, 20). Duplicate argument tuples
// keep their first occurrence.
ParsedInputs parse_test_inputs(std::string_view reply, std::string_view entry_point);

// Prompts for diverse inputs. Throws NoParsableInputs when nothing parses.
ParsedInputs generate_inputs(const ProgramUnderTest& put, LlmContext& llm, int inputs_per_prompt);

}  // namespace difforacle
