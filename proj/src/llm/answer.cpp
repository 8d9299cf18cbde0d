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

#include "llm/answer.hpp"

#include <algorithm>
#include <cctype>

namespace difforacle {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Affirmative: return "affirmative";
    case Answer::Negative: return "negative";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool contains_any(const std::string& text, const std::vector<std::string>& needles) {
  return std::any_of(needles.begin(), needles.end(),
                     [&](const std::string& n) { return text.find(lower(n)) != std::string::npos; });
}

std::string first_word(const std::string& text) {
  auto b = std::find_if(text.begin(), text.end(), [](unsigned char c) { return std::isalpha(c); });
  auto e = std::find_if(b, text.end(), [](unsigned char c) { return !std::isalpha(c); });
  return std::string(b, e);
}

}  // namespace

Answer classify_answer(std::string_view reply, const AnswerKeywords& keywords) {
  std::string text = lower(reply);
  if (contains_any(text, keywords.inconclusive)) return Answer::Inconclusive;
  std::string head = first_word(text);
  if (head == "yes") return Answer::Affirmative;
  if (head == "no") return Answer::Negative;
  if (contains_any(text, keywords.negative)) return Answer::Negative;
  if (contains_any(text, keywords.affirmative)) return Answer::Affirmative;
  return Answer::Inconclusive;
}

}  // namespace difforacle
