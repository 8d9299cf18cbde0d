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

#include "metrics/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "metrics/corpus.hpp"

namespace fs = std::filesystem;

namespace difforacle {

std::string format_percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", ratio * 100.0);
  return buf;
}

fs::path cell_dir(const fs::path& out_dir, const std::string& subject,
                  const std::string& technique, int run) {
  return out_dir / "cells" / subject / technique / ("run-" + std::to_string(run));
}

Value cell_evaluation_json(const CellOutcome& cell) {
  Value verdicts = Value::array();
  for (const auto& v : cell.verdicts) verdicts.push_back(display_label(v));
  Value j{{"run", cell.run}, {"status", cell.status}, {"verdicts", verdicts}};
  if (!cell.disposition.empty()) j["disposition"] = cell.disposition;
  if (!cell.error.empty()) j["error"] = cell.error;
  if (!cell.assertion.empty()) j["assertion"] = cell.assertion;
  if (cell.refs_slots >= 0) {
    j["refs_good"] = cell.refs_good;
    j["refs_slots"] = cell.refs_slots;
  }
  return j;
}

CellOutcome cell_from_evaluation_json(const Value& j) {
  CellOutcome c;
  c.run = j.at("run").get<int>();
  c.status = j.at("status").get<std::string>();
  for (const auto& v : j.value("verdicts", Value::array())) {
    std::string label = v.get<std::string>();
    Verdict verdict;
    if (label == "PT-masking") {
      verdict = {Category::PT, true};
    } else {
      auto cat = parse_category(label);
      if (!cat) throw ConfigError("unknown verdict label '" + label + "'");
      verdict = {*cat, false};
    }
    c.verdicts.push_back(verdict);
  }
  c.disposition = j.value("disposition", std::string());
  c.error = j.value("error", std::string());
  c.assertion = j.value("assertion", std::string());
  c.refs_good = j.value("refs_good", -1);
  c.refs_slots = j.value("refs_slots", -1);
  return c;
}

namespace {

std::string joined_labels(const CellOutcome& cell) {
  std::string out;
  for (const auto& v : cell.verdicts) {
    if (!out.empty()) out += ';';
    out += display_label(v);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Value technique_metrics(const RunTable& table, const std::string& technique) {
  auto counts = count_categories(table, technique, table.subjects);
  Value m;
  Value cats = Value::object();
  for (auto c : kAllCategories) cats[std::string(label(c))] = counts.count(c);
  m["counts"] = cats;
  m["pt_masking"] = counts.masking;
  m["found"] = counts.found;
  m["executions"] = counts.executions;
  m["success_rate"] = counts.executions
                          ? static_cast<double>(counts.count(Category::FT_IA)) /
                                static_cast<double>(counts.executions)
                          : 0.0;
  m["accuracy"] = counts.found ? Value(static_cast<double>(counts.count(Category::FT_IA)) /
                                       static_cast<double>(counts.found))
                               : Value();
  long good = 0, slots = 0, errors = 0;
  bool has_refs = false;
  for (const auto& subject : table.subjects) {
    for (const auto& cell : *table.find(subject, technique)) {
      if (cell.status == "error") ++errors;
      if (cell.refs_slots >= 0) {
        has_refs = true;
        good += cell.refs_good;
        slots += cell.refs_slots;
      }
    }
  }
  m["errors"] = errors;
  if (has_refs) {
    m["reference_good"] = good;
    m["reference_slots"] = slots;
    m["reference_goodness_rate"] = reference_goodness_rate(good, slots);
  }
  return m;
}

}  // namespace

Value report_json(const RunTable& table) {
  Value j;
  j["runs"] = table.runs;
  j["subjects"] = table.subjects;
  j["techniques"] = table.techniques;
  Value cells = Value::array();
  for (const auto& technique : table.techniques) {
    for (const auto& subject : table.subjects) {
      const auto* runs = table.find(subject, technique);
      if (!runs) continue;
      for (const auto& cell : *runs) {
        Value c = cell_evaluation_json(cell);
        c["subject"] = subject;
        c["technique"] = technique;
        cells.push_back(std::move(c));
      }
    }
  }
  j["cells"] = cells;
  Value metrics = Value::object();
  for (const auto& technique : table.techniques)
    metrics[technique] = technique_metrics(table, technique);
  j["metrics"] = metrics;
  return j;
}

std::string report_json_text(const RunTable& table) { return report_json(table).dump(2) + "\n"; }

std::string report_csv(const RunTable& table) {
  std::ostringstream out;
  out << "subject,technique,run,category,status\n";
  for (const auto& technique : table.techniques) {
    for (const auto& subject : table.subjects) {
      const auto* runs = table.find(subject, technique);
      if (!runs) continue;
      for (const auto& cell : *runs) {
        std::string status = cell.status;
        if (!cell.error.empty()) status += ": " + cell.error;
        out << csv_field(subject) << ',' << csv_field(technique) << ',' << cell.run << ','
            << csv_field(joined_labels(cell)) << ',' << csv_field(status) << '\n';
      }
    }
  }
  return out.str();
}

std::string summary_markdown(const RunTable& table) {
  std::ostringstream out;
  out << "# Evaluation summary\n\n";
  out << table.subjects.size() << " subjects x " << table.runs << " runs per technique.\n\n";
  out << "| technique | FT-IA | FT-Ia | FT-ia | PT | IT | found | success rate | accuracy |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& technique : table.techniques) {
    auto c = count_categories(table, technique, table.subjects);
    out << "| " << technique;
    for (auto cat : kAllCategories) out << " | " << c.count(cat);
    out << " | " << c.found << " | ";
    double sr = c.executions ? static_cast<double>(c.count(Category::FT_IA)) /
                                   static_cast<double>(c.executions)
                             : 0.0;
    out << format_percent(sr) << " (" << c.count(Category::FT_IA) << "/" << c.executions << ") | ";
    if (c.found)
      out << format_percent(static_cast<double>(c.count(Category::FT_IA)) /
                            static_cast<double>(c.found))
          << " (" << c.count(Category::FT_IA) << "/" << c.found << ")";
    else
      out << "n/a (0 found)";
    out << " |\n";
  }

  bool any_refs = false;
  std::ostringstream refs;
  refs << "\n## Reference versions\n\n| technique | good | total | goodness rate |\n|---|---|---|---|\n";
  for (const auto& technique : table.techniques) {
    long good = 0, slots = 0;
    bool has = false;
    for (const auto& subject : table.subjects)
      for (const auto& cell : *table.find(subject, technique))
        if (cell.refs_slots >= 0) {
          has = true;
          good += cell.refs_good;
          slots += cell.refs_slots;
        }
    if (!has) continue;
    any_refs = true;
    refs << "| " << technique << " | " << good << " | " << slots << " | "
         << format_percent(reference_goodness_rate(good, slots)) << " |\n";
  }
  if (any_refs) out << refs.str();

  // Multi-test suites: per-subject average counts per run, raw and rounded.
  for (const auto& technique : table.techniques) {
    bool multi = false;
    for (const auto& subject : table.subjects)
      for (const auto& cell : *table.find(subject, technique))
        multi = multi || cell.verdicts.size() > 1;
    if (!multi) continue;
    out << "\n## Average test cases per run: " << technique << "\n\n";
    out << "| subject | FT-IA | FT-Ia | FT-ia | PT | IT |\n|---|---|---|---|---|---|\n";
    for (const auto& subject : table.subjects) {
      auto c = count_categories(table, technique, {subject});
      out << "| " << subject;
      for (auto cat : kAllCategories) {
        double avg = static_cast<double>(c.count(cat)) / static_cast<double>(table.runs);
        char buf[48];
        std::snprintf(buf, sizeof buf, " | %.1f (%ld)", avg, std::lround(avg));
        out << buf;
      }
      out << " |\n";
    }
  }

  long errors = 0;
  for (const auto& [key, cells] : table.cells)
    for (const auto& cell : cells) errors += cell.status == "error";
  if (errors) out << "\n" << errors << " cell(s) ended in an error; see report.csv.\n";
  return out.str();
}

namespace {
void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
}
}  // namespace

void write_reports(const RunTable& table, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  write_file(out_dir / "report.json", report_json_text(table));
  write_file(out_dir / "report.csv", report_csv(table));
  write_file(out_dir / "summary.md", summary_markdown(table));
  Value run{{"runs", table.runs}, {"subjects", table.subjects}, {"techniques", table.techniques}};
  write_file(out_dir / "run.json", run.dump(2) + "\n");
}

RunTable regenerate_reports(const fs::path& out_dir) {
  Value run = Value::parse(read_text(out_dir / "run.json"), nullptr, false);
  if (run.is_discarded()) throw ConfigError("run.json is not valid JSON");
  RunTable table;
  table.runs = run.at("runs").get<int>();
  table.subjects = run.at("subjects").get<std::vector<std::string>>();
  table.techniques = run.at("techniques").get<std::vector<std::string>>();
  for (const auto& technique : table.techniques) {
    for (const auto& subject : table.subjects) {
      auto& cells = table.at(subject, technique);
      for (int r = 0; r < table.runs; ++r) {
        auto path = cell_dir(out_dir, subject, technique, r) / "outcome.json";
        Value j = Value::parse(read_text(path), nullptr, false);
        if (j.is_discarded() || !j.contains("evaluation"))
          throw ConfigError(path.string() + " has no evaluation record");
        cells.push_back(cell_from_evaluation_json(j["evaluation"]));
      }
    }
  }
  write_reports(table, out_dir);
  return table;
}

}  // namespace difforacle
