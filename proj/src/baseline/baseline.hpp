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
#include <string_view>

#include "core/taxonomy.hpp"
#include "llm/context.hpp"
#include "testgen/outcome.hpp"

namespace difforacle {

// Pulls one (input, expected) pair out of a reply: `assert f(args) == v`,
// `f(args) == v`, or `f(args) -> v`.
std::optional<TestCase> parse_asserted_test_case(std::string_view reply,
                                                 std::string_view entry_point);

// Two-step direct prompting: ask whether the PUT has bugs, then on an
// affirmative reply ask for a failure-inducing test case. Never executes the
// PUT. The outcome's disposition is one of no_bug_claimed, inconclusive,
// unparsable_test_case or test_case_parsed.
PipelineOutcome base_chatgpt_find(const ProgramUnderTest& put, LlmContext& llm);

}  // namespace difforacle
