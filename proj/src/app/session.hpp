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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "app/config.hpp"
#include "llm/client.hpp"
#include "llm/prompts.hpp"
#include "metrics/metrics.hpp"
#include "sandbox/sandbox.hpp"
#include "testgen/outcome.hpp"

namespace difforacle {

struct ClassifiedTest {
  TestCase test;
  std::string assertion;
  Verdict verdict;
};

// Everything a command needs, built once from a Config.
class Session {
 public:
  // `sandboxes` defaults to harness processes running cfg.harness.
  explicit Session(Config cfg, SandboxFactory sandboxes = nullptr);

  const Config& config() const { return cfg_; }

  // Differential Prompting (or the base_chatgpt baseline when it is the first
  // technique) on one subject directory. Writes <out>/<put_id>/outcome.json.
  PipelineOutcome find(const std::filesystem::path& subject_dir);

  // Ground-truth verdicts for each test in `tests_file` against the
  // buggy/patched pair in `subject_dir`.
  std::vector<ClassifiedTest> classify(const std::filesystem::path& subject_dir,
                                       const std::filesystem::path& tests_file);

  RunTable eval(const std::filesystem::path& corpus_dir);

 private:
  Sandbox& sandbox();
  std::shared_ptr<ChatTransport> transport();

  Config cfg_;
  SandboxFactory factory_;
  std::unique_ptr<Sandbox> sandbox_;
  std::optional<PromptLibrary> prompts_;
};

// Template and harness locations used when the config leaves them empty.
std::string default_templates_dir();
std::vector<std::string> default_harness_command();

}  // namespace difforacle
