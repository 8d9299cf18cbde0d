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

#include <fstream>

#include "core/errors.hpp"
#include "generator/code_extract.hpp"
#include "generator/generator.hpp"
#include "metrics/corpus.hpp"
#include "test_support.hpp"

namespace difforacle {
namespace {

using testing::OfflineLlm;
using testing::script;

const char* kBuggy = "def gcd(a, b):\n    if b == 0:\n        return a\n    return gcd(a, a % b)\n";
const char* kIterative = "def gcd(a, b):\n    while b != 0:\n        a, b = b, a % b\n    return a\n";
const char* kRecursive = "def gcd(x, y):\n    if y == 0:\n        return x\n    return gcd(y, x % y)\n";
const char* kIntent =
    "Intention: compute the greatest common divisor of two non-negative integers a and b.";

ProgramUnderTest gcd_put() {
  ProgramUnderTest p;
  p.id = "gcd";
  p.source = kBuggy;
  p.entry_point = "gcd";
  p.param_types = {{TypeKind::Int}, {TypeKind::Int}};
  return p;
}

std::string fenced(const std::string& code) { return "```python\n" + code + "```\n"; }

TEST(CodeExtract, FencedBlocksWinOverProse) {
  std::string reply = "Reference Version 1:\n" + fenced(kIterative) + "\nReference Version 2:\n```\n" +
                      kRecursive + "```\n```text\nnot code\n```\n";
  auto blocks = extract_code(reply);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], kIterative);
  EXPECT_EQ(blocks[1], kRecursive);
}

TEST(CodeExtract, HeuristicChunksForUnfencedReplies) {
  std::string reply = std::string("Here you go:\n") + kIterative + "\nAnd another:\n" + kRecursive;
  auto chunks = extract_code(reply);
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0], kIterative);
  EXPECT_EQ(chunks[1], kRecursive);
}

TEST(CodeExtract, HelpersStayWithTheirChunk) {
  std::string reply = "def helper(x):\n    return x\ndef f(a):\n    return helper(a)\n";
  auto chunks = heuristic_function_chunks(reply);
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_TRUE(defines_top_level_function(chunks[0], "f"));
}

TEST(CodeExtract, EntryPointNormalization) {
  std::string renamed = normalize_entry_point("def my_gcd(a, b):\n    return my_gcd(b, a)\n", "gcd");
  EXPECT_EQ(renamed, "def gcd(a, b):\n    return gcd(b, a)\n");
  EXPECT_EQ(normalize_entry_point(kIterative, "gcd"), kIterative);
  EXPECT_EQ(rename_identifier("gcd_x = gcd(1)", "gcd", "f"), "gcd_x = f(1)");
  EXPECT_EQ(first_top_level_function("x = 1\ndef g():\n    def inner(): pass\n"), "g");
  EXPECT_FALSE(defines_top_level_function("class A:\n    def gcd(self): pass\n", "gcd"));
}

TEST(CodeExtract, IntentionText) {
  EXPECT_EQ(extract_intention_text("Sure.\nIntention: add two numbers.\n"), "add two numbers.");
  EXPECT_EQ(extract_intention_text("  adds two numbers  "), "adds two numbers");
}

class GeneratorTest : public ::testing::Test {
 protected:
  ProcessSandbox sandbox{testing::stub_harness()};
  GenerationConfig cfg;
};

TEST_F(GeneratorTest, InfersIntentionFromTheSource) {
  OfflineLlm llm(script({{"What is the intention", {kIntent}}}));
  auto intention = infer_intention(gcd_put(), llm.ctx);
  EXPECT_EQ(intention.put_id, "gcd");
  EXPECT_EQ(intention.text,
            "compute the greatest common divisor of two non-negative integers a and b.");
  EXPECT_FALSE(intention.low_confidence);
}

TEST_F(GeneratorTest, EmptyOrVagueIntentions) {
  OfflineLlm empty(script({{"", {"Intention:   "}}}));
  EXPECT_THROW(infer_intention(gcd_put(), empty.ctx), EmptyIntention);
  OfflineLlm vague(script({{"", {"Intention: unclear."}}}));
  EXPECT_TRUE(infer_intention(gcd_put(), vague.ctx).low_confidence);
}

TEST_F(GeneratorTest, ReferencePromptCarriesOnlyTheIntention) {
  OfflineLlm llm(script({{"", {fenced(kIterative) + fenced(kRecursive)}}}),
                 CassetteMode::Record);
  Intention intention{"compute gcd of a and b by repeated remainders", "gcd", "", false};
  auto refs = generate_references(intention, gcd_put(), cfg, llm.ctx, sandbox);
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(refs[0].index, 1);
  EXPECT_EQ(refs[1].index, 2);
  EXPECT_TRUE(refs[0].compilable);
  EXPECT_EQ(refs[0].intention->text, intention.text);
  auto sent = llm.cassette.entries().at(0).request["messages"];
  ASSERT_EQ(sent.size(), 1u);
  std::string prompt = sent[0]["content"];
  EXPECT_NE(prompt.find(intention.text), std::string::npos);
  EXPECT_EQ(prompt.find("a % b"), std::string::npos);
}

TEST_F(GeneratorTest, RejectsEchoesSyntaxErrorsAndRegenerates) {
  std::string round1 = fenced(kBuggy) + fenced("def gcd(a, b:\n    return a\n") +
                       fenced("print(gcd(4, 6))\n");
  std::string round2 = fenced(kIterative);
  std::string round3 = fenced("def euclid(a, b):\n    return a if b == 0 else euclid(b, a % b)\n");
  OfflineLlm llm(script({{"", {round1, round2, round3}}}));
  GenerationLog log;
  auto refs = generate_references({"gcd", "gcd", "", false}, gcd_put(), cfg, llm.ctx, sandbox, &log);
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(refs[1].source, "def gcd(a, b):\n    return a if b == 0 else gcd(b, a % b)\n");
  EXPECT_EQ(log.llm_calls, 3);
  EXPECT_EQ(log.rejected_echo, 1);
  EXPECT_EQ(log.rejected_syntax, 1);
  EXPECT_EQ(log.rejected_no_entry_point, 1);
  EXPECT_EQ(log.candidates, 5);
}

TEST_F(GeneratorTest, InsufficientVersionsAfterAllRounds) {
  cfg.max_regen_rounds = 2;
  OfflineLlm llm(script({{"", {fenced(kIterative), "no code here", "still nothing"}}}));
  EXPECT_THROW(generate_references({"gcd", "gcd", "", false}, gcd_put(), cfg, llm.ctx, sandbox),
               InsufficientVersions);
  EXPECT_EQ(llm.transport->calls(), 3u);
}

TEST_F(GeneratorTest, ExtraCandidatesAreTruncated) {
  cfg.n_versions = 2;
  OfflineLlm llm(script({{"", {fenced(kIterative) + fenced(kRecursive) +
                                  fenced("def gcd(a, b):\n    return 1\n")}}}));
  auto refs = generate_references({"gcd", "gcd", "", false}, gcd_put(), cfg, llm.ctx, sandbox);
  EXPECT_EQ(refs.size(), 2u);
}

TEST_F(GeneratorTest, StrawmanDeclinesWhenNoBugIsClaimed) {
  OfflineLlm llm(script({{"contain bugs", {"No bug is found in this program."}}}));
  auto r = strawman_generate(gcd_put(), cfg, llm.ctx, sandbox);
  EXPECT_EQ(r.outcome, StrawmanOutcome::NoBugClaimed);
  EXPECT_TRUE(r.versions.empty());
  EXPECT_EQ(llm.transport->calls(), 1u);
}

TEST_F(GeneratorTest, StrawmanFixesInTheSameConversation) {
  OfflineLlm llm(script({{"contain bugs", {"Yes, the recursive call is wrong."}},
                         {"bug-fixed", {fenced(kIterative) + fenced(kRecursive)}}}),
                 CassetteMode::Record);
  auto r = strawman_generate(gcd_put(), cfg, llm.ctx, sandbox);
  EXPECT_EQ(r.outcome, StrawmanOutcome::Generated);
  EXPECT_EQ(r.versions.size(), 2u);
  auto second = llm.cassette.entries().at(1).request["messages"];
  ASSERT_EQ(second.size(), 3u);
  EXPECT_EQ(second[1]["role"], "assistant");
  std::string first_prompt = second[0]["content"];
  EXPECT_NE(first_prompt.find("a % b"), std::string::npos);
}

TEST_F(GeneratorTest, StrawmanInconclusive) {
  OfflineLlm llm(script({{"", {"More information is required."}}}));
  EXPECT_EQ(strawman_generate(gcd_put(), cfg, llm.ctx, sandbox).outcome,
            StrawmanOutcome::Inconclusive);
}

TEST_F(GeneratorTest, GoodReferencePassesAllGroundTruthTests) {
  std::vector<TestCase> truth{{{{Value(12), Value(20)}}, Value(4)}, {{{Value(17), Value(0)}}, Value(17)}};
  auto good = testing::reference(1, kIterative, "gcd");
  auto bad = testing::reference(2, kBuggy, "gcd");
  EXPECT_TRUE(is_good_reference(good, truth, sandbox));
  EXPECT_FALSE(is_good_reference(bad, truth, sandbox));
  EXPECT_THROW(is_good_reference(good, {}, sandbox), ConfigError);
}

TEST_F(GeneratorTest, PersistsIntentionAndReferences) {
  testing::TempDir dir;
  Intention intention{"compute gcd", "gcd", "", false};
  persist_generation(dir.path(), intention,
                     {testing::reference(1, kIterative, "gcd"), testing::reference(2, kRecursive, "gcd")});
  EXPECT_EQ(read_text(dir.path() / "gcd" / "intention.txt"), "compute gcd\n");
  EXPECT_EQ(read_text(dir.path() / "gcd" / "ref_2.src"), kRecursive);
}

TEST(GenerationConfig, Validation) {
  GenerationConfig c;
  c.n_versions = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c.n_versions = 3;
  c.max_regen_rounds = -1;
  EXPECT_THROW(c.validate(), ConfigError);
}

}  // namespace
}  // namespace difforacle
