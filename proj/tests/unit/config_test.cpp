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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "app/config.hpp"
#include "core/errors.hpp"
#include "test_support.hpp"

namespace difforacle {
namespace {

TEST(ConfigFile, ParsesKeyValueLines) {
  auto kv = parse_config_text(
      "# difforacle settings\n[difforacle]\nmodel = \"gpt-4\"\nk = 20  # budget\n"
      "out='runs/a # b'\n\n");
  EXPECT_EQ(kv.at("model"), "gpt-4");
  EXPECT_EQ(kv.at("k"), "20");
  EXPECT_EQ(kv.at("out"), "runs/a # b");
  EXPECT_THROW(parse_config_text("model gpt-4\n"), ConfigError);
  EXPECT_THROW(parse_config_text(" = 3\n"), ConfigError);
}

TEST(ConfigFile, AppliesSettings) {
  Config c;
  apply_setting(c, "techniques", "diffprompt, base_chatgpt");
  apply_setting(c, "strict_attempts", "true");
  apply_setting(c, "harness", "python3 '/opt/h arness.py' --quiet");
  apply_setting(c, "temperature_gen", "0.7");
  EXPECT_EQ(c.techniques, (std::vector<std::string>{"diffprompt", "base_chatgpt"}));
  EXPECT_TRUE(c.strict_attempts);
  EXPECT_EQ(c.harness, (std::vector<std::string>{"python3", "/opt/h arness.py", "--quiet"}));
  EXPECT_DOUBLE_EQ(c.temperature_gen, 0.7);
  EXPECT_THROW(apply_setting(c, "k", "ten"), ConfigError);
  EXPECT_THROW(apply_setting(c, "temperature_gen", "warm"), ConfigError);
  EXPECT_THROW(apply_setting(c, "colour", "blue"), ConfigError);
  for (const auto& key : config_keys()) EXPECT_NE(key, "");
}

TEST(ConfigFile, MissingFileIsAnIoError) {
  Config c;
  EXPECT_THROW(apply_config_file(c, "/nonexistent/difforacle.toml"), IoError);
}

TEST(Config, PrecedenceFlagsOverEnvOverFile) {
  testing::TempDir dir;
  auto file = dir.path() / "difforacle.toml";
  std::ofstream(file) << "model = from-file\nk = 3\nbase_url = http://file\n";
  ::setenv("DIFFORACLE_MODEL", "from-env", 1);
  ::setenv("DIFFORACLE_API_KEY", "sk-test-env", 1);
  Config c;
  apply_config_file(c, file);
  apply_environment(c);
  apply_json(c, Value::parse(R"({"k": 7})"));
  ::unsetenv("DIFFORACLE_MODEL");
  ::unsetenv("DIFFORACLE_API_KEY");
  EXPECT_EQ(c.model, "from-env");
  EXPECT_EQ(c.k, 7);
  EXPECT_EQ(c.base_url, "http://file");
  EXPECT_EQ(c.api_key, "sk-test-env");
  // The key never appears in the serialized config.
  EXPECT_EQ(to_json(c).dump().find("sk-test-env"), std::string::npos);
}

TEST(Config, JsonOverrides) {
  Config c;
  apply_json(c, Value::parse(R"({"techniques": ["strawman"], "harness": ["h", "-x"],
                                 "temperature_intent": 0.25, "strict_attempts": true,
                                 "seed": 42, "record": null})"));
  EXPECT_EQ(c.techniques, std::vector<std::string>{"strawman"});
  EXPECT_EQ(c.harness, (std::vector<std::string>{"h", "-x"}));
  EXPECT_DOUBLE_EQ(c.temperature_intent, 0.25);
  EXPECT_TRUE(c.strict_attempts);
  EXPECT_EQ(c.seed, 42);
  EXPECT_THROW(apply_json(c, Value::parse("[1]")), ConfigError);
  EXPECT_THROW(apply_json(c, Value::parse(R"({"k": [1]})")), ConfigError);
  EXPECT_THROW(apply_json(c, Value::parse(R"({"k": {}})")), ConfigError);
}

TEST(Config, Validation) {
  Config c;
  EXPECT_NO_THROW(c.validate());
  c.n_versions = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = Config{};
  c.record = "a";
  c.replay = "b";
  EXPECT_THROW(c.validate(), ConfigError);
  c = Config{};
  c.temperature_gen = 2.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = Config{};
  c.k = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(SplitCommand, QuotesGroupWords) {
  EXPECT_EQ(split_command(R"(a "b c"  d\e 'f"g')"),
            (std::vector<std::string>{"a", "b c", "d\\e", "f\"g"}));
  EXPECT_THROW(split_command("python3 'unclosed"), ConfigError);
  EXPECT_TRUE(split_command("   ").empty());
}

}  // namespace
}  // namespace difforacle
