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
#include <optional>
#include <string>
#include <vector>

#include "core/taxonomy.hpp"

namespace difforacle {

// corpus/<id>/{buggy.src, patched.src, tests.json, meta.json}
// meta.json: {"entry_point": "gcd", "arity": 2, "param_types": ["int", "int"],
//             "description": "..."}
struct CorpusEntry {
  std::string id;
  ProgramUnderTest buggy;
  ProgramUnderTest patched;
  std::vector<TestCase> ground_truth_tests;
  std::string description;
  // ingested_tests.json: suites produced by an external generator, one per run.
  std::optional<std::vector<std::vector<TestCase>>> ingested_runs;
};

struct SubjectMeta {
  std::string entry_point;
  std::vector<TypeTag> param_types;
  std::string description;
};

SubjectMeta load_meta(const std::filesystem::path& meta_json);
std::vector<TestCase> load_tests(const std::filesystem::path& tests_json);
std::string read_text(const std::filesystem::path& path);

CorpusEntry load_corpus_entry(const std::filesystem::path& dir);
// Entries sorted by id.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

// A single program to test: <dir>/put.src (or buggy.src) plus meta.json.
ProgramUnderTest load_subject(const std::filesystem::path& dir);

}  // namespace difforacle
