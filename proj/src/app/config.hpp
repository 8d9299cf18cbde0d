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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/value.hpp"

namespace difforacle {

// Settings shared by the CLI and the C API. Sources, lowest precedence first:
// built-in defaults, config file, environment, explicit flags.
struct Config {
  std::string model = "gpt-3.5-turbo-0301";
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;
  double temperature_intent = 0.2;
  double temperature_gen = 1.0;
  double temperature_baseline = 1.0;
  int n_versions = 2;
  int max_regen_rounds = 3;
  int k = 10;
  int saturation_window = 5;
  int inputs_per_prompt = 10;
  int timeout_ms = 5000;
  bool strict_attempts = false;
  int http_max_attempts = 5;
  int workers = 1;
  int runs = 10;
  std::vector<std::string> techniques{"diffprompt"};
  // Cassette file (find) or directory (eval). At most one of the two.
  std::string record;
  std::string replay;
  // Offline answers for recording, see ScriptedTransport.
  std::string script;
  std::string out_dir = "out";
  // argv of the execution harness.
  std::vector<std::string> harness;
  std::string templates_dir;
  // Informational: model sampling is not seedable from here.
  std::optional<long> seed;

  void validate() const;
};

// Set one field from its textual form. Keys use snake_case
// (e.g. "temperature_intent", "timeout_ms"); list keys take comma-separated
// values, harness takes a shell-like space-separated command.
void apply_setting(Config& cfg, const std::string& key, const std::string& value);
std::vector<std::string> config_keys();

// `key = value` lines; '#' starts a comment; values may be double-quoted.
// An optional `[difforacle]` table header is accepted and ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
void apply_config_file(Config& cfg, const std::filesystem::path& path);

// DIFFORACLE_API_KEY, DIFFORACLE_BASE_URL, DIFFORACLE_MODEL, DIFFORACLE_HARNESS,
// DIFFORACLE_TEMPLATES.
void apply_environment(Config& cfg);

// JSON object with any subset of the keys accepted by apply_setting; values
// may be JSON numbers, booleans, strings or arrays.
void apply_json(Config& cfg, const Value& j);
Value to_json(const Config& cfg);

std::vector<std::string> split_command(const std::string& text);

}  // namespace difforacle
