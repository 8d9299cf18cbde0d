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

#include <filesystem>
#include <string>

#include "core/value.hpp"
#include "metrics/metrics.hpp"

namespace difforacle {

// report.json, report.csv (subject,technique,run,category,status) and
// summary.md. Output depends only on the table, so rewriting is idempotent.
Value report_json(const RunTable& table);
// report.json contents: two-space indent, trailing newline.
std::string report_json_text(const RunTable& table);
std::string report_csv(const RunTable& table);
std::string summary_markdown(const RunTable& table);
void write_reports(const RunTable& table, const std::filesystem::path& out_dir);

// Percent with one decimal, e.g. 0.75 -> "75.0%".
std::string format_percent(double ratio);

// Rebuilds the table from <out>/run.json and the per-cell outcome.json files
// and rewrites the reports.
RunTable regenerate_reports(const std::filesystem::path& out_dir);

// Cell files: <out>/cells/<subject>/<technique>/run-<r>/outcome.json
std::filesystem::path cell_dir(const std::filesystem::path& out_dir, const std::string& subject,
                               const std::string& technique, int run);
Value cell_evaluation_json(const CellOutcome& cell);
CellOutcome cell_from_evaluation_json(const Value& j);

}  // namespace difforacle
