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

#include "testgen/coverage.hpp"

#include <algorithm>
#include <map>

namespace difforacle {

std::set<int> static_branch_points(std::string_view source) {
  std::set<int> lines;
  int lineno = 0;
  bool in_docstring = false;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    start = end + 1;
    ++lineno;
    auto b = line.find_first_not_of(" \t");
    if (b == std::string_view::npos) continue;
    line.remove_prefix(b);
    bool toggles = line.rfind("\"\"\"", 0) == 0 || line.rfind("'''", 0) == 0;
    if (in_docstring) {
      if (line.find("\"\"\"") != std::string_view::npos || line.find("'''") != std::string_view::npos)
        in_docstring = false;
      continue;
    }
    if (toggles) {
      auto rest = line.substr(3);
      if (rest.find("\"\"\"") == std::string_view::npos && rest.find("'''") == std::string_view::npos)
        in_docstring = true;
      continue;
    }
    for (std::string_view kw : {"if", "elif", "while", "for", "async for"}) {
      if (line.rfind(kw, 0) == 0 && line.size() > kw.size() &&
          (line[kw.size()] == ' ' || line[kw.size()] == '(')) {
        lines.insert(lineno);
        break;
      }
    }
  }
  return lines;
}

namespace {
std::map<int, int> destinations(const CoverageSet& covered, const std::set<int>& branch_points) {
  std::map<int, std::set<int>> dst;
  for (const auto& [from, to] : covered.arcs)
    if (branch_points.count(from)) dst[from].insert(to);
  std::map<int, int> counts;
  for (const auto& [from, tos] : dst) counts[from] = static_cast<int>(tos.size());
  return counts;
}
}  // namespace

bool branch_coverage_complete(const CoverageSet& covered, const std::set<int>& branch_points) {
  if (branch_points.empty()) return false;
  auto counts = destinations(covered, branch_points);
  return std::all_of(branch_points.begin(), branch_points.end(),
                     [&](int line) { return counts.count(line) && counts[line] >= 2; });
}

double branch_coverage_ratio(const CoverageSet& covered, const std::set<int>& branch_points) {
  if (branch_points.empty()) return 0.0;
  auto counts = destinations(covered, branch_points);
  int seen = 0;
  for (int line : branch_points) seen += std::min(2, counts.count(line) ? counts[line] : 0);
  return static_cast<double>(seen) / (2.0 * static_cast<double>(branch_points.size()));
}

}  // namespace difforacle
