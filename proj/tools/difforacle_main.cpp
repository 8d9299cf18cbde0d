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

// Command-line front end. Talks to the library only through difforacle.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "difforacle/difforacle.h"

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitNotFound = 2;

struct Flags {
  std::string config_file;
  std::optional<std::string> model;
  std::optional<double> temperature_intent;
  std::optional<double> temperature_gen;
  std::optional<double> temperature_baseline;
  std::optional<int> n_versions;
  std::optional<int> max_regen_rounds;
  std::optional<int> k;
  std::optional<int> saturation_window;
  std::optional<int> inputs_per_prompt;
  std::optional<int> timeout_ms;
  bool strict_attempts = false;
  std::optional<std::string> record;
  std::optional<std::string> replay;
  std::optional<std::string> script;
  std::optional<int> workers;
  std::optional<int> runs;
  std::optional<std::string> technique;
  std::optional<std::string> out;
  std::optional<std::string> harness;
  std::optional<std::string> templates;
  std::optional<long> seed;
  bool no_env = false;
};

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

json overrides(const Flags& f) {
  json j = json::object();
  put(j, "model", f.model);
  put(j, "temperature_intent", f.temperature_intent);
  put(j, "temperature_gen", f.temperature_gen);
  put(j, "temperature_baseline", f.temperature_baseline);
  put(j, "n_versions", f.n_versions);
  put(j, "max_regen_rounds", f.max_regen_rounds);
  put(j, "k", f.k);
  put(j, "saturation_window", f.saturation_window);
  put(j, "inputs_per_prompt", f.inputs_per_prompt);
  put(j, "timeout_ms", f.timeout_ms);
  if (f.strict_attempts) j["strict_attempts"] = true;
  put(j, "record", f.record);
  put(j, "replay", f.replay);
  put(j, "script", f.script);
  put(j, "workers", f.workers);
  put(j, "runs", f.runs);
  put(j, "techniques", f.technique);
  put(j, "out", f.out);
  put(j, "harness", f.harness);
  put(j, "templates", f.templates);
  put(j, "seed", f.seed);
  return j;
}

void report_error(const char* what) {
  std::fprintf(stderr, "difforacle: %s: %s (%s)\n", what, dfo_last_error(), dfo_last_error_kind());
}

struct SessionGuard {
  dfo_session* s = nullptr;
  ~SessionGuard() { dfo_session_destroy(s); }
};

bool open_session(const Flags& f, SessionGuard& g) {
  std::string ov = overrides(f).dump();
  const char* file = f.config_file.empty() ? nullptr : f.config_file.c_str();
  if (!file) {
    std::FILE* probe = std::fopen("difforacle.toml", "r");
    if (probe) {
      std::fclose(probe);
      file = "difforacle.toml";
    }
  }
  if (dfo_session_create(ov.c_str(), file, f.no_env ? 0 : 1, &g.s) != DFO_OK) {
    report_error("configuration");
    return false;
  }
  return true;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dfo_string_free(s);
  return out;
}

int cmd_find(const Flags& f, const std::string& subject) {
  SessionGuard g;
  if (!open_session(f, g)) return kExitError;
  int found = 0;
  char* out = nullptr;
  if (dfo_find(g.s, subject.c_str(), &found, &out) != DFO_OK) {
    report_error("find");
    return kExitError;
  }
  json outcome = json::parse(take(out));
  if (found) {
    std::cout << outcome["test_case"]["assertion"].get<std::string>() << "\n";
    return kExitFound;
  }
  std::cout << "no failure-inducing test case found";
  if (outcome.contains("status")) std::cout << " (" << outcome["status"].get<std::string>() << ")";
  std::cout << "\n";
  return kExitNotFound;
}

int cmd_classify(const Flags& f, const std::string& subject, const std::string& tests) {
  SessionGuard g;
  if (!open_session(f, g)) return kExitError;
  char* out = nullptr;
  if (dfo_classify(g.s, subject.c_str(), tests.c_str(), &out) != DFO_OK) {
    report_error("classify");
    return kExitError;
  }
  for (const auto& v : json::parse(take(out)))
    std::cout << v["label"].get<std::string>() << "\t" << v["assertion"].get<std::string>()
              << "\n";
  return 0;
}

int cmd_eval(const Flags& f, const std::string& corpus) {
  SessionGuard g;
  if (!open_session(f, g)) return kExitError;
  char* out = nullptr;
  if (dfo_eval(g.s, corpus.c_str(), &out) != DFO_OK) {
    report_error("eval");
    return kExitError;
  }
  json report = json::parse(take(out));
  char* cfg = nullptr;
  dfo_session_config(g.s, &cfg);
  json resolved = json::parse(take(cfg));
  for (auto& [technique, m] : report["metrics"].items()) {
    std::cout << technique << ": FT-IA " << m["counts"]["FT-IA"] << " of " << m["executions"]
              << " executions, " << m["found"] << " found";
    if (m["errors"].get<long>() > 0) std::cout << ", " << m["errors"] << " errors";
    std::cout << "\n";
  }
  std::cout << "reports written to " << resolved["out"].get<std::string>() << "\n";
  return 0;
}

int cmd_report(const std::string& out_dir) {
  char* out = nullptr;
  if (dfo_regenerate_reports(out_dir.c_str(), &out) != DFO_OK) {
    report_error("report");
    return kExitError;
  }
  dfo_string_free(out);
  std::cout << "reports rewritten in " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difforacle: failure-inducing test cases via differential prompting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dfo_version()));
  Flags f;

  auto* find = app.add_subcommand("find", "Search one subject for a failure-inducing test case "
                                          "(exit 0 found, 2 not found, 1 error)");
  auto* eval = app.add_subcommand("eval", "Run every subject of a corpus and write reports");
  auto* classify =
      app.add_subcommand("classify", "Classify test cases against a buggy/patched pair");
  auto* report = app.add_subcommand("report", "Rewrite reports from a previous eval output");

  std::string subject, corpus, tests, out_dir;
  find->add_option("subject", subject, "Subject directory (put.src or buggy.src, meta.json)")
      ->required();
  eval->add_option("corpus", corpus, "Corpus directory, one subdirectory per subject")
      ->required();
  classify->add_option("subject", subject, "Directory with buggy.src, patched.src, meta.json")
      ->required();
  classify->add_option("tests", tests, "JSON file of test cases")->required();
  report->add_option("out", out_dir, "Output directory of an earlier eval")->required();

  auto common = [&f](CLI::App* c) {
    c->add_option("--config", f.config_file,
                  "key = value config file (default: ./difforacle.toml if present)");
    c->add_option("--model", f.model, "Chat model name");
    c->add_option("--temperature-intent", f.temperature_intent,
                  "Sampling temperature for intention inference");
    c->add_option("--temperature-gen", f.temperature_gen,
                  "Sampling temperature for reference and input generation");
    c->add_option("--temperature-baseline", f.temperature_baseline,
                  "Sampling temperature for the baseline and strawman prompts");
    c->add_option("--n-versions", f.n_versions, "Reference versions to generate");
    c->add_option("--max-regen-rounds", f.max_regen_rounds,
                  "Extra reference requests when candidates are rejected");
    c->add_option("--k", f.k, "Attempt budget for differential testing");
    c->add_option("--saturation-window", f.saturation_window,
                  "Attempts without new coverage before giving up");
    c->add_option("--inputs-per-prompt", f.inputs_per_prompt, "Inputs requested per prompt");
    c->add_option("--timeout-ms", f.timeout_ms, "Per-execution timeout in milliseconds");
    c->add_flag("--strict-attempts", f.strict_attempts,
                "Count inputs without consensus against the attempt budget");
    auto* rec = c->add_option("--record", f.record,
                              "Record model traffic to FILE (find) or DIR (eval)");
    auto* rep = c->add_option("--replay", f.replay,
                              "Answer model requests from FILE (find) or DIR (eval)");
    rec->excludes(rep);
    rep->excludes(rec);
    c->add_option("--script", f.script,
                  "Offline scripted answers (file, or per-cell directory for eval --record)");
    c->add_option("--workers", f.workers, "Parallel eval workers");
    c->add_option("--runs", f.runs, "Repetitions per subject and technique (eval)");
    c->add_option("--technique", f.technique,
                  "diffprompt, base_chatgpt, strawman, ingested (comma-separated for eval)");
    c->add_option("--out", f.out, "Output directory");
    c->add_option("--harness", f.harness, "Execution harness command line");
    c->add_option("--templates", f.templates, "Prompt template directory");
    c->add_option("--seed", f.seed, "Recorded in the run config; model sampling is external");
    c->add_flag("--no-env", f.no_env, "Ignore DIFFORACLE_* environment variables");
  };
  common(find);
  common(eval);
  common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*find) return cmd_find(f, subject);
  if (*eval) return cmd_eval(f, corpus);
  if (*classify) return cmd_classify(f, subject, tests);
  if (*report) return cmd_report(out_dir);
  return kExitError;
}
