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

#include "metrics/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "baseline/baseline.hpp"
#include "core/errors.hpp"
#include "metrics/report.hpp"

namespace fs = std::filesystem;

namespace difforacle {

bool is_known_technique(const std::string& name) {
  return name == kDiffPrompt || name == kBaseChatGpt || name == kStrawman || name == kIngested;
}

void EvalConfig::validate() const {
  if (techniques.empty()) throw ConfigError("no technique selected");
  for (const auto& t : techniques)
    if (!is_known_technique(t)) throw ConfigError("unknown technique '" + t + "'");
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (mode != CassetteMode::Passthrough && cassette_dir.empty())
    throw ConfigError("record/replay needs a cassette directory");
  if (script_dir && mode != CassetteMode::Record)
    throw ConfigError("scripted answers are only used while recording");
  generation.validate();
  testgen.validate();
}

fs::path cell_cassette_path(const fs::path& cassette_dir, const std::string& subject,
                            const std::string& technique, int run) {
  return cassette_dir / subject / technique / ("run-" + std::to_string(run) + ".jsonl");
}

namespace {

std::shared_ptr<ChatTransport> cell_transport(const EvalConfig& cfg, const LlmSetup& llm,
                                              const std::string& subject,
                                              const std::string& technique, int run) {
  if (!cfg.script_dir) return llm.transport;
  auto dir = *cfg.script_dir / subject;
  auto per_run = dir / technique / ("run-" + std::to_string(run) + ".json");
  if (fs::exists(per_run)) return ScriptedTransport::from_file(per_run.string());
  auto shared = dir / (technique + ".json");
  if (fs::exists(shared)) return ScriptedTransport::from_file(shared.string());
  throw ConfigError("no script for " + subject + "/" + technique + " run " + std::to_string(run));
}

Cassette cell_cassette(const EvalConfig& cfg, const std::string& subject,
                       const std::string& technique, int run) {
  switch (cfg.mode) {
    case CassetteMode::Replay:
      return Cassette::open_replay(cell_cassette_path(cfg.cassette_dir, subject, technique, run));
    case CassetteMode::Record: {
      auto path = cell_cassette_path(cfg.cassette_dir, subject, technique, run);
      fs::create_directories(path.parent_path());
      return Cassette::open_record(path);
    }
    case CassetteMode::Passthrough:
      break;
  }
  return Cassette(CassetteMode::Passthrough);
}

int count_good(const std::vector<ReferenceVersion>& refs, const CorpusEntry& entry,
               Sandbox& sandbox, int timeout_ms) {
  if (entry.ground_truth_tests.empty())
    throw ConfigError("subject '" + entry.id + "' has no ground-truth tests");
  int good = 0;
  for (const auto& r : refs)
    good += is_good_reference(r, entry.ground_truth_tests, sandbox, timeout_ms) ? 1 : 0;
  return good;
}

void classify_into(CellOutcome& cell, const TestCase& tc, const CorpusEntry& entry,
                   Sandbox& sandbox, int timeout_ms) {
  try {
    cell.verdicts.push_back(classify(tc, entry.buggy, entry.patched, sandbox, timeout_ms));
  } catch (const AmbiguousVerdict& e) {
    cell.error = e.kind();
  }
}

void write_json(const fs::path& path, const Value& j) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

}  // namespace

CellOutcome run_cell(const CorpusEntry& entry, const std::string& technique, int run,
                     const EvalConfig& cfg, const LlmSetup& llm, Sandbox& sandbox) {
  CellOutcome cell;
  cell.run = run;
  Value body = Value::object();
  const auto dir = cell_dir(cfg.out_dir, entry.id, technique, run);
  const int timeout = cfg.testgen.timeout_ms;
  bool generation_started = false;

  try {
    if (technique == kIngested) {
      if (!entry.ingested_runs || static_cast<int>(entry.ingested_runs->size()) <= run)
        throw ConfigError("no ingested suite for run " + std::to_string(run));
      cell.status = "ingested";
      Value tests = Value::array();
      for (const auto& tc : (*entry.ingested_runs)[run]) {
        tests.push_back(to_json(tc));
        classify_into(cell, tc, entry, sandbox, timeout);
      }
      body = Value{{"technique", technique}, {"put_id", entry.id}, {"tests", tests}};
    } else {
      if (!llm.prompts) throw ConfigError("prompt templates not loaded");
      auto transport = cell_transport(cfg, llm, entry.id, technique, run);
      LlmClient client(transport);
      Cassette cassette = cell_cassette(cfg, entry.id, technique, run);
      LlmContext ctx{client, cassette, *llm.prompts, llm.settings, llm.keywords};

      if (technique == kStrawman) {
        generation_started = true;
        auto res = strawman_generate(entry.buggy, cfg.generation, ctx, sandbox);
        cell.status = std::string(to_string(res.outcome));
        cell.disposition = cell.status;
        if (!entry.ground_truth_tests.empty()) {
          cell.refs_slots = cfg.generation.n_versions;
          cell.refs_good = count_good(res.versions, entry, sandbox, timeout);
        }
        body = Value{{"technique", technique},
                     {"put_id", entry.id},
                     {"status", cell.status},
                     {"answer", res.answer},
                     {"versions", static_cast<int>(res.versions.size())}};
        if (!res.versions.empty()) {
          Intention none;
          none.put_id = "refs";
          persist_generation(dir, none, res.versions);
        }
      } else {
        PipelineOutcome outcome;
        if (technique == kDiffPrompt) {
          auto intention = infer_intention(entry.buggy, ctx);
          generation_started = true;
          GenerationLog log;
          auto refs =
              generate_references(intention, entry.buggy, cfg.generation, ctx, sandbox, &log);
          persist_generation(dir, intention, refs);
          if (!entry.ground_truth_tests.empty()) {
            cell.refs_slots = cfg.generation.n_versions;
            cell.refs_good = count_good(refs, entry, sandbox, timeout);
          }
          outcome = find_failure_inducing(entry.buggy, refs, cfg.testgen, ctx, sandbox);
          outcome.details["intention"] = intention.text;
          outcome.details["intention_low_confidence"] = intention.low_confidence;
          outcome.details["generation"] = Value{{"llm_calls", log.llm_calls},
                                                {"candidates", log.candidates},
                                                {"rejected_syntax", log.rejected_syntax},
                                                {"rejected_echo", log.rejected_echo},
                                                {"rejected_no_entry_point",
                                                 log.rejected_no_entry_point}};
        } else {
          outcome = base_chatgpt_find(entry.buggy, ctx);
        }
        cell.status = std::string(to_string(outcome.status));
        cell.disposition = outcome.disposition;
        if (outcome.test_case) {
          cell.assertion = assertion_line(entry.buggy.entry_point, *outcome.test_case);
          classify_into(cell, *outcome.test_case, entry, sandbox, timeout);
        }
        body = to_json(outcome, false);
      }
    }
  } catch (const Error& e) {
    cell.status = "error";
    cell.error = e.kind();
    cell.verdicts.clear();
    cell.assertion.clear();
    if (generation_started && cell.refs_slots < 0 && !entry.ground_truth_tests.empty()) {
      cell.refs_slots = cfg.generation.n_versions;
      cell.refs_good = 0;
    }
    body = Value{{"technique", technique}, {"put_id", entry.id}, {"message", e.what()}};
  }

  body["evaluation"] = cell_evaluation_json(cell);
  write_json(dir / "outcome.json", body);
  return cell;
}

RunTable run_corpus(const std::vector<CorpusEntry>& corpus, const EvalConfig& cfg,
                    const LlmSetup& llm, const SandboxFactory& sandboxes) {
  cfg.validate();
  struct Job {
    const CorpusEntry* entry;
    std::string technique;
    int run;
  };
  std::vector<Job> jobs;
  for (const auto& technique : cfg.techniques)
    for (const auto& entry : corpus)
      for (int r = 0; r < cfg.runs; ++r) jobs.push_back({&entry, technique, r});

  std::vector<CellOutcome> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::unique_ptr<Sandbox> sandbox;
    std::string setup_error;
    try {
      sandbox = sandboxes();
    } catch (const Error& e) {
      setup_error = e.kind();
    }
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& job = jobs[i];
      if (!sandbox) {
        results[i].run = job.run;
        results[i].status = "error";
        results[i].error = setup_error.empty() ? "SandboxError" : setup_error;
        continue;
      }
      results[i] = run_cell(*job.entry, job.technique, job.run, cfg, llm, *sandbox);
    }
  };

  const int n = std::min<int>(cfg.workers, std::max<std::size_t>(jobs.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunTable table;
  table.runs = cfg.runs;
  table.techniques = cfg.techniques;
  for (const auto& e : corpus) table.subjects.push_back(e.id);
  for (std::size_t i = 0; i < jobs.size(); ++i)
    table.at(jobs[i].entry->id, jobs[i].technique).push_back(std::move(results[i]));
  write_reports(table, cfg.out_dir);
  return table;
}

double reference_goodness_rate(const std::vector<CorpusEntry>& corpus,
                               const std::vector<GeneratedRefs>& generated, Sandbox& sandbox,
                               int timeout_ms) {
  std::map<std::string, const CorpusEntry*> by_id;
  for (const auto& e : corpus) by_id[e.id] = &e;
  long good = 0, total = 0;
  for (const auto& g : generated) {
    auto it = by_id.find(g.subject);
    if (it == by_id.end()) throw ConfigError("unknown subject '" + g.subject + "'");
    good += count_good(g.refs, *it->second, sandbox, timeout_ms);
    total += std::max<long>(g.slots, static_cast<long>(g.refs.size()));
  }
  return reference_goodness_rate(good, total);
}

}  // namespace difforacle
