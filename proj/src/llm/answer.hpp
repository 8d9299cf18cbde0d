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

#include <string>
#include <string_view>
#include <vector>

namespace difforacle {

enum class Answer { Affirmative, Negative, Inconclusive };

std::string_view to_string(Answer a);

// Keyword lists for reading a yes/no reply to "does this program contain
// bugs?". Matching is case-insensitive substring search, checked in the order
// inconclusive, leading yes/no, negative, affirmative.
struct AnswerKeywords {
  std::vector<std::string> inconclusive{
      "more information is required", "more information is needed", "need more information",
      "not enough information", "cannot determine", "can't determine", "unable to determine",
      "cannot confirm", "can't confirm", "cannot be determined"};
  std::vector<std::string> negative{"no bug",          "no bugs",        "not contain",
                                    "doesn't contain", "does not have",  "doesn't have",
                                    "bug-free",        "no errors",      "no issues",
                                    "works correctly", "is correct"};
  std::vector<std::string> affirmative{"yes", "bug", "error", "incorrect", "issue", "mistake",
                                       "wrong"};
};

Answer classify_answer(std::string_view reply, const AnswerKeywords& keywords = {});

}  // namespace difforacle
