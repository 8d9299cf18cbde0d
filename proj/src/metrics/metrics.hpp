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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/taxonomy.hpp"

namespace difforacle {

// One (subject, technique, run) cell.
struct CellOutcome {
  int run = 0;
  // Pipeline status, strawman outcome, "ingested", or "error".
  std::string status;
  // Classified test cases: at most one for single-test techniques.
  std::vector<Verdict> verdicts;
  std::string disposition;
  std::string error;
  std::string assertion;
  // Reference goodness (-1 when not applicable).
  int refs_good = -1;
  int refs_slots = -1;
};

struct RunTable {
  int runs = 10;
  std::vector<std::string> subjects;
  std::vector<std::string> techniques;
  std::map<std::pair<std::string, std::string>, std::vector<CellOutcome>> cells;

  std::vector<CellOutcome>& at(const std::string& subject, const std::string& technique);
  const std::vector<CellOutcome>* find(const std::string& subject,
                                       const std::string& technique) const;
};

struct CategoryCounts {
  std::array<long, 5> by_category{};  // indexed by Category
  long masking = 0;                   // PT cells flagged PT-masking
  long found = 0;                     // test cases of any category
  long executions = 0;                // subjects x runs

  long count(Category c) const { return by_category[static_cast<std::size_t>(c)]; }
};

// Single source of the FT-IA count shared by success_rate and accuracy.
// Throws IncompleteTable when a selected subject lacks R runs.
CategoryCounts count_categories(const RunTable& table, const std::string& technique,
                                const std::vector<std::string>& subjects);

// #FT-IA / (|subjects| x R)
double success_rate(const RunTable& table, const std::string& technique,
                    const std::vector<std::string>& subjects);

// #FT-IA / #found. Throws UndefinedAccuracy when nothing was found.
double accuracy(const RunTable& table, const std::string& technique,
                const std::vector<std::string>& subjects);

// good / total generated reference slots.
double reference_goodness_rate(long good, long total);

}  // namespace difforacle
