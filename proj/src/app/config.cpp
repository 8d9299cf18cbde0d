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

#include "app/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "generator/code_extract.hpp"

namespace difforacle {

namespace {

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long n = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<int>(n);
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

}  // namespace

std::vector<std::string> split_command(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char c : text) {
    if (quote) {
      if (c == quote) quote = 0;
      else cur += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_word = true;
    } else if (c == ' ' || c == '\t') {
      if (in_word) out.push_back(cur);
      cur.clear();
      in_word = false;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quote) throw ConfigError("unterminated quote in command: " + text);
  if (in_word) out.push_back(cur);
  return out;
}

void Config::validate() const {
  if (model.empty()) throw ConfigError("model must not be empty");
  if (!record.empty() && !replay.empty())
    throw ConfigError("--record and --replay are mutually exclusive");
  if (!script.empty() && !replay.empty())
    throw ConfigError("--script answers requests live and cannot be combined with --replay");
  if (n_versions < 2) throw ConfigError("n_versions must be >= 2");
  if (max_regen_rounds < 0) throw ConfigError("max_regen_rounds must be >= 0");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (saturation_window < 1) throw ConfigError("saturation_window must be >= 1");
  if (inputs_per_prompt < 1) throw ConfigError("inputs_per_prompt must be >= 1");
  if (timeout_ms < 1) throw ConfigError("timeout_ms must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (http_max_attempts < 1) throw ConfigError("http_max_attempts must be >= 1");
  for (double t : {temperature_intent, temperature_gen, temperature_baseline})
    if (t < 0.0 || t > 2.0) throw ConfigError("temperatures must lie in [0, 2]");
}

std::vector<std::string> config_keys() {
  return {"model",           "base_url",          "api_key",          "temperature_intent",
          "temperature_gen", "temperature_baseline", "n_versions",    "max_regen_rounds",
          "k",               "saturation_window", "inputs_per_prompt", "timeout_ms",
          "strict_attempts", "http_max_attempts", "workers",          "runs",
          "techniques",      "record",            "replay",           "script",
          "out",             "harness",           "templates",        "seed"};
}

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  const std::string& v = value;
  if (key == "model") cfg.model = v;
  else if (key == "base_url") cfg.base_url = v;
  else if (key == "api_key") cfg.api_key = v;
  else if (key == "temperature_intent") cfg.temperature_intent = to_double(key, v);
  else if (key == "temperature_gen") cfg.temperature_gen = to_double(key, v);
  else if (key == "temperature_baseline") cfg.temperature_baseline = to_double(key, v);
  else if (key == "n_versions") cfg.n_versions = to_int(key, v);
  else if (key == "max_regen_rounds") cfg.max_regen_rounds = to_int(key, v);
  else if (key == "k") cfg.k = to_int(key, v);
  else if (key == "saturation_window") cfg.saturation_window = to_int(key, v);
  else if (key == "inputs_per_prompt") cfg.inputs_per_prompt = to_int(key, v);
  else if (key == "timeout_ms") cfg.timeout_ms = to_int(key, v);
  else if (key == "strict_attempts") cfg.strict_attempts = to_bool(key, v);
  else if (key == "http_max_attempts") cfg.http_max_attempts = to_int(key, v);
  else if (key == "workers") cfg.workers = to_int(key, v);
  else if (key == "runs") cfg.runs = to_int(key, v);
  else if (key == "techniques" || key == "technique") cfg.techniques = split_list(v);
  else if (key == "record") cfg.record = v;
  else if (key == "replay") cfg.replay = v;
  else if (key == "script") cfg.script = v;
  else if (key == "out" || key == "out_dir") cfg.out_dir = v;
  else if (key == "harness") cfg.harness = split_command(v);
  else if (key == "templates" || key == "templates_dir") cfg.templates_dir = v;
  else if (key == "seed") cfg.seed = to_int(key, v);
  else throw ConfigError("unknown setting '" + key + "'");
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (!value.empty() && value[0] != '"' && value[0] != '\'') {
      auto hash = value.find(" #");
      if (hash != std::string::npos) value = trim(value.substr(0, hash));
    }
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = unquote(value);
  }
  return out;
}

void apply_config_file(Config& cfg, const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  for (const auto& [k, v] : parse_config_text(ss.str())) apply_setting(cfg, k, v);
}

void apply_environment(Config& cfg) {
  auto env = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
  };
  if (auto v = env("DIFFORACLE_API_KEY")) cfg.api_key = v;
  if (auto v = env("DIFFORACLE_BASE_URL")) cfg.base_url = v;
  if (auto v = env("DIFFORACLE_MODEL")) cfg.model = v;
  if (auto v = env("DIFFORACLE_HARNESS")) cfg.harness = split_command(v);
  if (auto v = env("DIFFORACLE_TEMPLATES")) cfg.templates_dir = v;
}

void apply_json(Config& cfg, const Value& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (v.is_string()) {
      apply_setting(cfg, key, v.get<std::string>());
    } else if (v.is_array()) {
      std::vector<std::string> items;
      for (const auto& x : v) {
        if (!x.is_string()) throw ConfigError(key + ": expected strings");
        items.push_back(x.get<std::string>());
      }
      if (key == "harness") cfg.harness = items;
      else if (key == "techniques" || key == "technique") cfg.techniques = items;
      else throw ConfigError(key + ": does not take a list");
    } else if (v.is_boolean()) {
      apply_setting(cfg, key, v.get<bool>() ? "true" : "false");
    } else if (v.is_number_integer()) {
      apply_setting(cfg, key, std::to_string(v.get<long>()));
    } else if (v.is_number()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      apply_setting(cfg, key, os.str());
    } else if (!v.is_null()) {
      throw ConfigError(key + ": unsupported value");
    }
  }
}

Value to_json(const Config& cfg) {
  Value j{{"model", cfg.model},
          {"base_url", cfg.base_url},
          {"temperature_intent", cfg.temperature_intent},
          {"temperature_gen", cfg.temperature_gen},
          {"temperature_baseline", cfg.temperature_baseline},
          {"n_versions", cfg.n_versions},
          {"max_regen_rounds", cfg.max_regen_rounds},
          {"k", cfg.k},
          {"saturation_window", cfg.saturation_window},
          {"inputs_per_prompt", cfg.inputs_per_prompt},
          {"timeout_ms", cfg.timeout_ms},
          {"strict_attempts", cfg.strict_attempts},
          {"http_max_attempts", cfg.http_max_attempts},
          {"workers", cfg.workers},
          {"runs", cfg.runs},
          {"techniques", cfg.techniques},
          {"record", cfg.record},
          {"replay", cfg.replay},
          {"script", cfg.script},
          {"out", cfg.out_dir},
          {"harness", cfg.harness},
          {"templates", cfg.templates_dir}};
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

}  // namespace difforacle
