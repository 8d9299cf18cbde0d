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

#include "app/session.hpp"

#include <fstream>

#include "baseline/baseline.hpp"
#include "core/errors.hpp"
#include "generator/generator.hpp"
#include "metrics/corpus.hpp"
#include "metrics/runner.hpp"
#include "sandbox/process_sandbox.hpp"
#include "testgen/testgen.hpp"

namespace fs = std::filesystem;

namespace difforacle {

#ifndef DIFFORACLE_TEMPLATES_DIR
#define DIFFORACLE_TEMPLATES_DIR "templates"
#endif
#ifndef DIFFORACLE_HARNESS_SCRIPT
#define DIFFORACLE_HARNESS_SCRIPT "harness.py"
#endif

std::string default_templates_dir() { return DIFFORACLE_TEMPLATES_DIR; }

std::vector<std::string> default_harness_command() {
  return {"python3", "-u", DIFFORACLE_HARNESS_SCRIPT};
}

namespace {

GenerationConfig generation_config(const Config& c) {
  GenerationConfig g;
  g.n_versions = c.n_versions;
  g.max_regen_rounds = c.max_regen_rounds;
  return g;
}

TestGenConfig testgen_config(const Config& c) {
  TestGenConfig t;
  t.k_attempts = c.k;
  t.saturation_window = c.saturation_window;
  t.inputs_per_prompt = c.inputs_per_prompt;
  t.timeout_ms = c.timeout_ms;
  t.count_discarded = c.strict_attempts;
  return t;
}

PromptSettings prompt_settings(const Config& c) {
  PromptSettings s;
  s.model = c.model;
  s.temperature_intent = c.temperature_intent;
  s.temperature_gen = c.temperature_gen;
  s.temperature_baseline = c.temperature_baseline;
  return s;
}

}  // namespace

Session::Session(Config cfg, SandboxFactory sandboxes)
    : cfg_(std::move(cfg)), factory_(std::move(sandboxes)) {
  cfg_.validate();
  if (cfg_.templates_dir.empty()) cfg_.templates_dir = default_templates_dir();
  if (cfg_.harness.empty()) cfg_.harness = default_harness_command();
  if (!factory_) {
    HarnessOptions opts;
    opts.command = cfg_.harness;
    factory_ = process_sandbox_factory(opts);
  }
  prompts_ = PromptLibrary::load(cfg_.templates_dir);
}

Sandbox& Session::sandbox() {
  if (!sandbox_) sandbox_ = factory_();
  return *sandbox_;
}

std::shared_ptr<ChatTransport> Session::transport() {
  if (!cfg_.replay.empty()) return nullptr;
  if (!cfg_.script.empty()) return ScriptedTransport::from_file(cfg_.script);
  if (cfg_.api_key.empty())
    throw ConfigError("DIFFORACLE_API_KEY is not set; use --replay or --script to run offline");
  HttpOptions http;
  http.base_url = cfg_.base_url;
  http.api_key = cfg_.api_key;
  http.max_attempts = cfg_.http_max_attempts;
  return std::make_shared<HttpTransport>(http);
}

PipelineOutcome Session::find(const fs::path& subject_dir) {
  ProgramUnderTest put = load_subject(subject_dir);
  const std::string technique = cfg_.techniques.empty() ? kDiffPrompt : cfg_.techniques.front();
  if (technique != kDiffPrompt && technique != kBaseChatGpt)
    throw ConfigError("find supports diffprompt and base_chatgpt, not '" + technique + "'");

  Cassette cassette = !cfg_.replay.empty()   ? Cassette::open_replay(cfg_.replay)
                      : !cfg_.record.empty() ? Cassette::open_record(cfg_.record)
                                             : Cassette(CassetteMode::Passthrough);
  LlmClient client(transport());
  LlmContext ctx{client, cassette, *prompts_, prompt_settings(cfg_), AnswerKeywords{}};

  PipelineOutcome outcome;
  fs::path out = fs::path(cfg_.out_dir);
  if (technique == kBaseChatGpt) {
    outcome = base_chatgpt_find(put, ctx);
  } else {
    auto intention = infer_intention(put, ctx);
    GenerationLog log;
    auto refs = generate_references(intention, put, generation_config(cfg_), ctx, sandbox(), &log);
    persist_generation(out, intention, refs);
    outcome = find_failure_inducing(put, refs, testgen_config(cfg_), ctx, sandbox());
    outcome.details["intention"] = intention.text;
    outcome.details["intention_low_confidence"] = intention.low_confidence;
  }

  fs::create_directories(out / put.id);
  std::ofstream f(out / put.id / "outcome.json", std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write outcome.json under " + out.string());
  f << to_json(outcome).dump(2) << '\n';
  return outcome;
}

std::vector<ClassifiedTest> Session::classify(const fs::path& subject_dir,
                                              const fs::path& tests_file) {
  CorpusEntry entry = load_corpus_entry(subject_dir);
  std::vector<ClassifiedTest> out;
  for (auto& tc : load_tests(tests_file)) {
    Verdict v = difforacle::classify(tc, entry.buggy, entry.patched, sandbox(), cfg_.timeout_ms);
    std::string line = assertion_line(entry.buggy.entry_point, tc);
    out.push_back({std::move(tc), std::move(line), v});
  }
  return out;
}

RunTable Session::eval(const fs::path& corpus_dir) {
  auto corpus = load_corpus(corpus_dir);
  if (corpus.empty()) throw ConfigError("no subjects under " + corpus_dir.string());
  EvalConfig ec;
  ec.techniques = cfg_.techniques;
  ec.runs = cfg_.runs;
  ec.generation = generation_config(cfg_);
  ec.testgen = testgen_config(cfg_);
  ec.workers = cfg_.workers;
  ec.out_dir = cfg_.out_dir;
  if (!cfg_.replay.empty()) {
    ec.mode = CassetteMode::Replay;
    ec.cassette_dir = cfg_.replay;
  } else if (!cfg_.record.empty()) {
    ec.mode = CassetteMode::Record;
    ec.cassette_dir = cfg_.record;
  }
  LlmSetup llm;
  if (!cfg_.script.empty()) {
    // A directory of per-cell scripts, or a single script shared by every cell.
    if (fs::is_directory(cfg_.script)) ec.script_dir = fs::path(cfg_.script);
    else llm.transport = ScriptedTransport::from_file(cfg_.script);
  } else {
    bool needs_model = false;
    for (const auto& t : ec.techniques) needs_model = needs_model || t != kIngested;
    if (needs_model) llm.transport = transport();
  }
  if (ec.script_dir && ec.mode != CassetteMode::Record)
    throw ConfigError("a script directory needs --record to choose where cassettes go");
  llm.prompts = &*prompts_;
  llm.settings = prompt_settings(cfg_);
  return run_corpus(corpus, ec, llm, factory_);
}

}  // namespace difforacle
