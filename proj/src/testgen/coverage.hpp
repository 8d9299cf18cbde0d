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

#include <set>
#include <string_view>

#include "core/taxonomy.hpp"

namespace difforacle {

// 1-based lines that open a two-way branch: if/elif/while/for headers.
std::set<int> static_branch_points(std::string_view source);

// Every static branch point has been seen leaving towards two or more
// distinct lines. False when there are no branch points at all.
bool branch_coverage_complete(const CoverageSet& covered, const std::set<int>& branch_points);

// Fraction of branch outcomes (two per branch point) observed.
double branch_coverage_ratio(const CoverageSet& covered, const std::set<int>& branch_points);

}  // namespace difforacle
