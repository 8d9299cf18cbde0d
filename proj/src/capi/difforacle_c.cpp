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

#include "difforacle/difforacle.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "app/config.hpp"
#include "app/session.hpp"
#include "core/errors.hpp"
#include "metrics/report.hpp"

using namespace difforacle;

struct dfo_session {
  std::unique_ptr<Session> impl;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_kind;

dfo_status status_for(const std::string& kind) {
  if (kind == "ConfigError" || kind == "MissingPlaceholder") return DFO_ERR_CONFIG;
  if (kind == "IoError") return DFO_ERR_IO;
  if (kind == "SandboxError" || kind == "HarnessCrash") return DFO_ERR_SANDBOX;
  if (kind == "CassetteMiss") return DFO_ERR_CASSETTE_MISS;
  if (kind == "LlmError" || kind == "HttpError" || kind == "RateLimited" ||
      kind == "ScriptExhausted")
    return DFO_ERR_LLM;
  if (kind == "AmbiguousVerdict") return DFO_ERR_AMBIGUOUS_VERDICT;
  if (kind == "EmptyIntention" || kind == "InsufficientVersions" || kind == "NoParsableInputs" ||
      kind == "NondeterministicSubject" || kind == "UnparsableTestCase")
    return DFO_ERR_GENERATION;
  if (kind == "IncompleteTable" || kind == "UndefinedAccuracy") return DFO_ERR_METRICS;
  return DFO_ERR_INTERNAL;
}

dfo_status fail(dfo_status s, std::string kind, std::string message) {
  g_last_kind = std::move(kind);
  g_last_error = std::move(message);
  return s;
}

template <typename F>
dfo_status guarded(F&& body) {
  g_last_error.clear();
  g_last_kind.clear();
  try {
    body();
    return DFO_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DFO_ERR_CONFIG, "ConfigError", e.what());
  } catch (const std::exception& e) {
    return fail(DFO_ERR_INTERNAL, "Internal", e.what());
  } catch (...) {
    return fail(DFO_ERR_INTERNAL, "Internal", "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dfo_version(void) { return "1.0.0"; }

const char* dfo_status_name(dfo_status status) {
  switch (status) {
    case DFO_OK: return "ok";
    case DFO_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DFO_ERR_CONFIG: return "config";
    case DFO_ERR_IO: return "io";
    case DFO_ERR_SANDBOX: return "sandbox";
    case DFO_ERR_LLM: return "llm";
    case DFO_ERR_CASSETTE_MISS: return "cassette_miss";
    case DFO_ERR_AMBIGUOUS_VERDICT: return "ambiguous_verdict";
    case DFO_ERR_GENERATION: return "generation";
    case DFO_ERR_METRICS: return "metrics";
    case DFO_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* dfo_last_error(void) { return g_last_error.c_str(); }
const char* dfo_last_error_kind(void) { return g_last_kind.c_str(); }

void dfo_string_free(char* s) { std::free(s); }

dfo_status dfo_session_create(const char* overrides_json, const char* config_file,
                              int use_environment, dfo_session** out) {
  if (!out) return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "out is NULL");
  *out = nullptr;
  return guarded([&] {
    Config cfg;
    if (config_file && *config_file) apply_config_file(cfg, config_file);
    if (use_environment) apply_environment(cfg);
    if (overrides_json && *overrides_json) {
      Value j = Value::parse(overrides_json, nullptr, false);
      if (j.is_discarded()) throw ConfigError("overrides are not valid JSON");
      apply_json(cfg, j);
    }
    auto s = std::make_unique<dfo_session>();
    s->impl = std::make_unique<Session>(std::move(cfg));
    *out = s.release();
  });
}

void dfo_session_destroy(dfo_session* session) { delete session; }

dfo_status dfo_session_config(const dfo_session* session, char** config_json) {
  if (!session || !config_json)
    return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded([&] { *config_json = dup_string(to_json(session->impl->config()).dump(2)); });
}

dfo_status dfo_find(dfo_session* session, const char* subject_dir, int* found,
                    char** outcome_json) {
  if (!session || !subject_dir)
    return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded([&] {
    auto outcome = session->impl->find(subject_dir);
    if (found) *found = outcome.found() ? 1 : 0;
    if (outcome_json) *outcome_json = dup_string(to_json(outcome).dump(2));
  });
}

dfo_status dfo_classify(dfo_session* session, const char* subject_dir, const char* tests_file,
                        char** verdicts_json) {
  if (!session || !subject_dir || !tests_file)
    return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded([&] {
    auto verdicts = session->impl->classify(subject_dir, tests_file);
    Value arr = Value::array();
    for (const auto& v : verdicts) {
      arr.push_back(Value{{"test", to_json(v.test)},
                          {"assertion", v.assertion},
                          {"category", std::string(label(v.verdict.category))},
                          {"label", display_label(v.verdict)}});
    }
    if (verdicts_json) *verdicts_json = dup_string(arr.dump(2));
  });
}

dfo_status dfo_eval(dfo_session* session, const char* corpus_dir, char** report_json) {
  if (!session || !corpus_dir)
    return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded([&] {
    auto table = session->impl->eval(corpus_dir);
    if (report_json) *report_json = dup_string(report_json_text(table));
  });
}

dfo_status dfo_regenerate_reports(const char* out_dir, char** report_json) {
  if (!out_dir) return fail(DFO_ERR_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded([&] {
    auto table = regenerate_reports(out_dir);
    if (report_json) *report_json = dup_string(report_json_text(table));
  });
}

}  // extern "C"
