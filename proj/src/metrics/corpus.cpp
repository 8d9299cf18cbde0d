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

#include "metrics/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace fs = std::filesystem;

namespace difforacle {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {
std::string dir_name(const fs::path& dir) {
  fs::path p = dir.lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  return p.filename().string();
}

Value read_json(const fs::path& path) {
  Value j = Value::parse(read_text(path), nullptr, false);
  if (j.is_discarded()) throw ConfigError(path.string() + " is not valid JSON");
  return j;
}
}  // namespace

SubjectMeta load_meta(const fs::path& meta_json) {
  Value j = read_json(meta_json);
  SubjectMeta meta;
  if (!j.contains("entry_point") || !j["entry_point"].is_string())
    throw ConfigError(meta_json.string() + ": missing entry_point");
  meta.entry_point = j["entry_point"].get<std::string>();
  meta.description = j.value("description", std::string());
  if (j.contains("param_types")) {
    for (const auto& t : j["param_types"]) {
      auto tag = parse_type_tag(t.get<std::string>());
      if (!tag) throw ConfigError(meta_json.string() + ": unknown type tag " + t.dump());
      meta.param_types.push_back(*tag);
    }
  }
  if (j.contains("arity")) {
    auto arity = j["arity"].get<int>();
    if (arity < 0) throw ConfigError(meta_json.string() + ": negative arity");
    if (!j.contains("param_types"))
      meta.param_types.assign(static_cast<std::size_t>(arity), TypeTag{TypeKind::Any});
    else if (static_cast<std::size_t>(arity) != meta.param_types.size())
      throw ConfigError(meta_json.string() + ": arity does not match param_types");
  }
  return meta;
}

std::vector<TestCase> load_tests(const fs::path& tests_json) {
  Value j = read_json(tests_json);
  if (j.is_object() && j.contains("tests")) j = j["tests"];
  if (!j.is_array()) throw ConfigError(tests_json.string() + ": expected an array of test cases");
  std::vector<TestCase> tests;
  for (const auto& t : j) tests.push_back(test_case_from_json(t));
  return tests;
}

namespace {

ProgramUnderTest make_program(std::string id, std::string source, const SubjectMeta& meta) {
  ProgramUnderTest p;
  p.id = std::move(id);
  p.source = std::move(source);
  p.entry_point = meta.entry_point;
  p.param_types = meta.param_types;
  return p;
}

std::vector<std::vector<TestCase>> load_ingested(const fs::path& path) {
  Value j = read_json(path);
  std::vector<std::vector<TestCase>> runs;
  auto load_suite = [](const Value& suite) {
    std::vector<TestCase> tests;
    for (const auto& t : suite) tests.push_back(test_case_from_json(t));
    return tests;
  };
  if (j.is_object() && j.contains("runs")) {
    for (const auto& suite : j["runs"]) runs.push_back(load_suite(suite));
  } else if (j.is_array() && !j.empty() && j[0].is_array()) {
    for (const auto& suite : j) runs.push_back(load_suite(suite));
  } else if (j.is_array()) {
    runs.push_back(load_suite(j));
  } else {
    throw ConfigError(path.string() + ": expected {\"runs\": [...]} or an array of tests");
  }
  return runs;
}

}  // namespace

CorpusEntry load_corpus_entry(const fs::path& dir) {
  CorpusEntry e;
  e.id = dir_name(dir);
  SubjectMeta meta = load_meta(dir / "meta.json");
  e.description = meta.description;
  e.buggy = make_program(e.id, read_text(dir / "buggy.src"), meta);
  e.patched = make_program(e.id + ".patched", read_text(dir / "patched.src"), meta);
  if (fs::exists(dir / "tests.json")) e.ground_truth_tests = load_tests(dir / "tests.json");
  if (fs::exists(dir / "ingested_tests.json"))
    e.ingested_runs = load_ingested(dir / "ingested_tests.json");
  return e;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("corpus directory not found: " + dir.string());
  std::vector<fs::path> subjects;
  for (const auto& d : fs::directory_iterator(dir))
    if (d.is_directory() && fs::exists(d.path() / "meta.json")) subjects.push_back(d.path());
  std::sort(subjects.begin(), subjects.end());
  std::vector<CorpusEntry> entries;
  for (const auto& s : subjects) entries.push_back(load_corpus_entry(s));
  return entries;
}

ProgramUnderTest load_subject(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("subject directory not found: " + dir.string());
  SubjectMeta meta = load_meta(dir / "meta.json");
  fs::path src = fs::exists(dir / "put.src") ? dir / "put.src" : dir / "buggy.src";
  return make_program(dir_name(dir), read_text(src), meta);
}

}  // namespace difforacle
