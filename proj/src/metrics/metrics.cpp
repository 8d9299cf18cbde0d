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

#include "metrics/metrics.hpp"

#include "core/errors.hpp"

namespace difforacle {

std::vector<CellOutcome>& RunTable::at(const std::string& subject, const std::string& technique) {
  return cells[{subject, technique}];
}

const std::vector<CellOutcome>* RunTable::find(const std::string& subject,
                                               const std::string& technique) const {
  auto it = cells.find({subject, technique});
  return it == cells.end() ? nullptr : &it->second;
}

CategoryCounts count_categories(const RunTable& table, const std::string& technique,
                                const std::vector<std::string>& subjects) {
  CategoryCounts counts;
  for (const auto& subject : subjects) {
    const auto* runs = table.find(subject, technique);
    if (!runs || static_cast<int>(runs->size()) != table.runs)
      throw IncompleteTable("no complete set of " + std::to_string(table.runs) + " runs for " +
                            subject + "/" + technique);
    for (const auto& cell : *runs) {
      ++counts.executions;
      for (const auto& v : cell.verdicts) {
        ++counts.by_category[static_cast<std::size_t>(v.category)];
        if (v.masking) ++counts.masking;
        ++counts.found;
      }
    }
  }
  return counts;
}

double success_rate(const RunTable& table, const std::string& technique,
                    const std::vector<std::string>& subjects) {
  auto c = count_categories(table, technique, subjects);
  if (c.executions == 0) throw IncompleteTable("no subjects selected");
  return static_cast<double>(c.count(Category::FT_IA)) / static_cast<double>(c.executions);
}

double accuracy(const RunTable& table, const std::string& technique,
                const std::vector<std::string>& subjects) {
  auto c = count_categories(table, technique, subjects);
  if (c.found == 0) throw UndefinedAccuracy("technique " + technique + " found no test case");
  return static_cast<double>(c.count(Category::FT_IA)) / static_cast<double>(c.found);
}

double reference_goodness_rate(long good, long total) {
  if (total <= 0) return 0.0;
  return static_cast<double>(good) / static_cast<double>(total);
}

}  // namespace difforacle
