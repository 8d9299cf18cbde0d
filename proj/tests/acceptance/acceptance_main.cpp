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

// Acceptance checks. Each criterion prints exactly one PASS or FAIL line;
// the process exits non-zero if any criterion fails. Everything runs offline
// against committed cassettes, table sandboxes, and the stub harness.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "baseline/baseline.hpp"
#include "blackbox.hpp"
#include "core/errors.hpp"
#include "generator/generator.hpp"
#include "metrics/corpus.hpp"
#include "metrics/metrics.hpp"
#include "metrics/report.hpp"
#include "metrics/runner.hpp"
#include "sandbox/process_sandbox.hpp"
#include "test_support.hpp"
#include "testgen/testgen.hpp"

namespace difforacle {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::TableSandbox;

// Pinned tolerances and limits.
constexpr double kRunningExampleSeconds = 5.0;
constexpr double kTaxonomySeconds = 60.0;
constexpr int kTaxonomyMinCases = 500;
constexpr int kConsensusFixtures = 200;
constexpr int kStoppingFixtures = 200;
constexpr double kMetricsTolerance = 1e-12;
constexpr double kReplaySeconds = 120.0;

struct Result {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string q(const fs::path& p) { return blackbox::quote(p); }

const fs::path& fixtures() {
  static const fs::path dir = testing::fixtures_dir();
  return dir;
}

// 1. Running example through the command-line binary.
Result running_example() {
  blackbox::TempDir out;
  auto t0 = Clock::now();
  auto found = blackbox::run(DFO_CLI, "find " + q(fixtures() / "gcd_buggy") + " --no-env --replay " +
                                          q(fixtures() / "cassettes" / "gcd_buggy.jsonl") +
                                          " --out " + q(out.path()));
  auto tests = out.path() / "found.json";
  std::ofstream(tests) << R"([{"args": [12, 20], "expected": 4}])";
  auto label = blackbox::run(DFO_CLI, "classify " + q(fixtures() / "corpus" / "gcd_program1") +
                                          " " + q(tests) + " --no-env --out " + q(out.path()));
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "find exit " << found.code << " printed '" << found.out.substr(0, found.out.find('\n'))
    << "', classify '" << label.out.substr(0, label.out.find('\n')) << "', " << secs << " s";
  bool ok = found.code == 0 && found.out == "gcd(12, 20) == 4\n" && label.code == 0 &&
            label.out == "FT-IA\tgcd(12, 20) == 4\n" && secs < kRunningExampleSeconds;
  return {ok, d.str()};
}

// A sandbox whose two programs answer with whatever the current case says.
class CaseSandbox final : public Sandbox {
 public:
  ExecutionResult buggy, patched;
  SyntaxCheck syntax_check(const std::string&) override { return {true, {}}; }
  ExecutionResult execute(const std::string& source, const std::string&, const std::vector<Value>&,
                          int) override {
    return source == "buggy" ? buggy : patched;
  }
};

enum class Expect { FT_IA, FT_Ia, FT_ia, PT, IT };

// Written from the five category definitions, deliberately phrased in terms
// of "failure-revealing input", "correct assertion" and "passing test" rather
// than the production control flow. Outputs are indices into a small domain;
// -1 stands for a buggy run that produced no output (timeout).
Expect reference_category(bool illegal_argument, int buggy_out, int correct_out, int asserted) {
  if (illegal_argument) return Expect::IT;
  bool test_passes = buggy_out >= 0 && asserted == buggy_out;
  if (test_passes) return Expect::PT;
  bool input_reveals_failure = buggy_out != correct_out;
  bool assertion_correct = asserted == correct_out;
  if (input_reveals_failure && assertion_correct) return Expect::FT_IA;
  if (input_reveals_failure) return Expect::FT_Ia;
  // A correct assertion on a non-failure-revealing input cannot fail.
  if (assertion_correct) return Expect::PT;
  return Expect::FT_ia;
}

Expect as_expect(Category c) {
  switch (c) {
    case Category::FT_IA: return Expect::FT_IA;
    case Category::FT_Ia: return Expect::FT_Ia;
    case Category::FT_ia: return Expect::FT_ia;
    case Category::PT: return Expect::PT;
    case Category::IT: return Expect::IT;
  }
  return Expect::PT;
}

// 2. Taxonomy against the independent re-implementation.
Result taxonomy_oracle() {
  auto t0 = Clock::now();
  // Four-value output domain: two ints, a float, and an exception.
  const std::vector<ExecutionResult> domain{ExecutionResult::ok(0), ExecutionResult::ok(4),
                                            ExecutionResult::ok(2.5),
                                            ExecutionResult::exception("ValueError")};
  auto domain_value = [&](int i) { return *observed_output(domain[static_cast<size_t>(i)]); };

  ProgramUnderTest buggy = testing::program("b", "buggy");
  ProgramUnderTest patched = testing::program("g", "patched");
  // Argument lists: two well-typed, then statically ill-typed ones.
  struct Input {
    std::vector<Value> args;
    bool illegal;
  };
  const std::vector<Input> inputs{{{12, 20}, false},      {{17, 0}, false},
                                  {{"12", 20}, true},     {{12, Value()}, true},
                                  {{Value::array(), 1}, true}, {{12}, true},
                                  {{1, 2, 3}, true}};
  // Patched-program behaviors that mark the input illegal at run time.
  const std::vector<ExecutionResult> runtime_illegal{ExecutionResult::exception("TypeError"),
                                                     ExecutionResult::illegal_input("bad")};

  CaseSandbox sandbox;
  int cases = 0, disagreements = 0;
  std::string first_disagreement;
  auto check = [&](const std::vector<Value>& args, bool illegal, int b, int g, int e,
                   const ExecutionResult& patched_result) {
    sandbox.buggy = b < 0 ? ExecutionResult::timeout() : domain[static_cast<size_t>(b)];
    sandbox.patched = patched_result;
    TestCase tc{{args, InputOrigin::Manual}, domain_value(e)};
    Expect want = reference_category(illegal, b, g, e);
    Expect got = as_expect(classify(tc, buggy, patched, sandbox).category);
    ++cases;
    if (got != want) {
      if (!disagreements++) {
        std::ostringstream os;
        os << "args " << Value(args).dump() << " b=" << b << " g=" << g << " e=" << e;
        first_disagreement = os.str();
      }
    }
  };

  for (const auto& in : inputs)
    for (int b = -1; b < 4; ++b)
      for (int g = 0; g < 4; ++g)
        for (int e = 0; e < 4; ++e) check(in.args, in.illegal, b, g, e, domain[static_cast<size_t>(g)]);
  for (const auto& illegal : runtime_illegal)
    for (int b = -1; b < 4; ++b)
      for (int e = 0; e < 4; ++e) check({12, 20}, true, b, 0, e, illegal);

  // A patched-program timeout has no verdict at all.
  sandbox.buggy = domain[0];
  sandbox.patched = ExecutionResult::timeout();
  bool ambiguous = false;
  try {
    classify({{{12, 20}}, Value(0)}, buggy, patched, sandbox);
  } catch (const AmbiguousVerdict&) {
    ambiguous = true;
  }

  double secs = seconds_since(t0);
  std::ostringstream d;
  d << cases << " cases, " << disagreements << " disagreements";
  if (disagreements) d << " (first: " << first_disagreement << ")";
  d << ", patched timeout " << (ambiguous ? "ambiguous" : "NOT ambiguous") << ", " << secs << " s";
  return {cases >= kTaxonomyMinCases && disagreements == 0 && ambiguous && secs < kTaxonomySeconds,
          d.str()};
}

const char* kBranchPut = "def f(a, b):\n    if a > b:\n        return a\n    return b\n";

// Randomized table fixture: PUT and references map (a, b) in [0, 4]^2 to
// outputs in {0, 1, 2}; the references are noisy copies of a hidden truth.
struct RandomFixture {
  TableSandbox sandbox;
  ProgramUnderTest put = testing::program("put", kBranchPut);
  std::vector<ReferenceVersion> refs;
  TestGenConfig cfg;
  std::vector<std::string> replies;

  explicit RandomFixture(std::mt19937& rng) {
    std::uniform_int_distribution<int> out(0, 2), arg(0, 4), pct(0, 99);
    auto table = [&](int noise) {
      std::vector<int> t(25);
      for (auto& v : t) v = out(rng);
      return std::make_shared<std::vector<int>>(t);
    };
    auto truth = table(0);
    auto copy = [&](int noise) {
      auto t = std::make_shared<std::vector<int>>(*truth);
      for (auto& v : *t)
        if (pct(rng) < noise) v = out(rng);
      return t;
    };
    auto lookup = [](std::shared_ptr<std::vector<int>> t, bool cov) {
      return [t, cov](const std::vector<Value>& a) {
        long x = a[0].get<long>(), y = a[1].get<long>();
        CoverageSet c;
        if (cov) c.arcs.insert(x > y ? std::pair{2, 3} : std::pair{2, 4});
        return ExecutionResult::ok((*t)[static_cast<size_t>(x * 5 + y)], c);
      };
    };
    sandbox.define(kBranchPut, lookup(copy(25), true));
    int n_refs = 2 + pct(rng) % 2;
    for (int i = 1; i <= n_refs; ++i) {
      std::string src = "ref" + std::to_string(i);
      sandbox.define(src, lookup(copy(20), false));
      refs.push_back(testing::reference(i, src));
    }
    cfg.k_attempts = 2 + pct(rng) % 9;
    cfg.saturation_window = 1 + pct(rng) % 6;
    cfg.count_discarded = pct(rng) < 30;
    int n_replies = 1 + pct(rng) % 4;
    for (int r = 0; r < n_replies; ++r) {
      std::string text;
      for (int i = 0; i < 10; ++i)
        text += "f(" + std::to_string(arg(rng)) + ", " + std::to_string(arg(rng)) + ")\n";
      replies.push_back(text);
    }
  }

  PipelineOutcome run() {
    testing::OfflineLlm llm(testing::script({{"diverse test inputs", replies}}));
    return find_failure_inducing(put, refs, cfg, llm.ctx, sandbox);
  }
};

// 3. Every found test case has unanimous references and a differing PUT.
Result consensus_soundness() {
  std::mt19937 rng(20260301);
  int found = 0, violations = 0, errors = 0;
  for (int i = 0; i < kConsensusFixtures; ++i) {
    RandomFixture fx(rng);
    PipelineOutcome out;
    try {
      out = fx.run();
    } catch (const std::exception&) {
      ++errors;
      continue;
    }
    if (!out.found()) continue;
    ++found;
    const auto& args = out.test_case->input.args;
    bool all_agree = true;
    for (const auto& ref : fx.refs) {
      auto r = fx.sandbox.execute(ref.source, ref.entry_point, args, fx.cfg.timeout_ms);
      auto v = observed_output(r);
      all_agree = all_agree && v && output_equal(*v, out.test_case->expected);
    }
    auto p = fx.sandbox.execute(fx.put.source, fx.put.entry_point, args, fx.cfg.timeout_ms);
    auto pv = observed_output(p);
    bool put_differs = !pv || !output_equal(*pv, out.test_case->expected);
    if (!(all_agree && put_differs)) ++violations;
  }
  std::ostringstream d;
  d << kConsensusFixtures << " fixtures, " << found << " found, " << violations << " violations, "
    << errors << " errors";
  // A vacuous run (nothing found) would prove nothing.
  return {violations == 0 && errors == 0 && found > 0, d.str()};
}

// 4. Both references share the injected base-case bug; the found test is FT-Ia.
Result shared_bug_reproduction() {
  auto entry = load_corpus_entry(fixtures() / "corpus" / "gcd_base_case");
  auto prompts = PromptLibrary::load(testing::templates_dir());
  LlmSetup llm;
  llm.prompts = &prompts;
  EvalConfig cfg;
  cfg.runs = 1;
  cfg.techniques = {kDiffPrompt};
  cfg.mode = CassetteMode::Replay;
  cfg.cassette_dir = fixtures() / "corpus_cassettes";
  auto sandbox = process_sandbox_factory(testing::stub_harness())();

  std::vector<std::string> fingerprints;
  CellOutcome first;
  for (int rep = 0; rep < 2; ++rep) {
    blackbox::TempDir out;
    cfg.out_dir = out.path();
    auto c = run_cell(entry, kDiffPrompt, 0, cfg, llm, *sandbox);
    auto outcome = read_text(cell_dir(out.path(), entry.id, kDiffPrompt, 0) / "outcome.json");
    fingerprints.push_back(cell_evaluation_json(c).dump() + "\n" + outcome);
    if (rep == 0) first = c;
  }
  bool deterministic = fingerprints[0] == fingerprints[1];
  bool ft_ia = first.status == "found" && first.verdicts.size() == 1 &&
               first.verdicts[0].category == Category::FT_Ia;

  // Show that the references agree with each other and not with the patch.
  bool shared_bug = false;
  std::string shown;
  if (ft_ia) {
    blackbox::TempDir out;
    cfg.out_dir = out.path();
    run_cell(entry, kDiffPrompt, 0, cfg, llm, *sandbox);
    auto outcome = Value::parse(
        read_text(cell_dir(out.path(), entry.id, kDiffPrompt, 0) / "outcome.json"));
    auto tc = test_case_from_json(outcome["test_case"]);
    auto refs_dir = cell_dir(out.path(), entry.id, kDiffPrompt, 0) / entry.buggy.id;
    auto r1 = sandbox->execute(read_text(refs_dir / "ref_1.src"), entry.buggy.entry_point,
                               tc.input.args, kDefaultTimeoutMs);
    auto r2 = sandbox->execute(read_text(refs_dir / "ref_2.src"), entry.buggy.entry_point,
                               tc.input.args, kDefaultTimeoutMs);
    auto g = sandbox->execute(entry.patched.source, entry.patched.entry_point, tc.input.args,
                              kDefaultTimeoutMs);
    shared_bug = results_equal(r1, r2) && !results_equal(r1, g);
    shown = first.assertion + " (patched gives " + canonical(*observed_output(g)) + ")";
  }
  std::ostringstream d;
  d << "gcd_base_case run-0: status " << first.status << ", verdict "
    << (first.verdicts.empty() ? "none" : std::string(label(first.verdicts[0].category)))
    << (shown.empty() ? "" : ", " + shown) << ", references share the bug "
    << (shared_bug ? "yes" : "no") << ", replay " << (deterministic ? "deterministic" : "DIFFERS");
  return {ft_ia && shared_bug && deterministic, d.str()};
}

// 5. Attempt budget, coverage monotonicity, and saturation.
Result stopping_contracts() {
  std::mt19937 rng(7);
  int over_budget = 0, non_monotone = 0, runs = 0;
  for (int i = 0; i < kStoppingFixtures; ++i) {
    RandomFixture fx(rng);
    PipelineOutcome out;
    try {
      out = fx.run();
    } catch (const std::exception&) {
      continue;
    }
    ++runs;
    int counted = 0;
    std::size_t prev = 0;
    for (const auto& rec : out.trace) {
      if (rec.counted) ++counted;
      if (rec.coverage_arcs < prev) ++non_monotone;
      prev = rec.coverage_arcs;
    }
    if (counted > fx.cfg.k_attempts) ++over_budget;
  }

  // Full coverage early: both branch outcomes after two inputs, PUT correct.
  // `branchy`: the PUT reports one of two branch arcs; otherwise one fixed arc.
  auto saturation = [](const std::string& put_src, bool branchy, const std::string& reply,
                       int window) {
    TableSandbox sandbox;
    auto max_fn = [](bool cov, bool branches) {
      return [cov, branches](const std::vector<Value>& a) {
        long x = a[0].get<long>(), y = a[1].get<long>();
        CoverageSet c;
        if (cov && branches) c.arcs.insert(x > y ? std::pair{2, 3} : std::pair{2, 4});
        if (cov && !branches) c.arcs.insert({1, 2});
        return ExecutionResult::ok(std::max(x, y), c);
      };
    };
    sandbox.define(put_src, max_fn(true, branchy));
    sandbox.define("ref1", max_fn(false, false));
    sandbox.define("ref2", max_fn(false, false));
    TestGenConfig cfg;
    cfg.saturation_window = window;
    cfg.k_attempts = 50;
    testing::OfflineLlm llm(testing::script({{"diverse test inputs", {reply}}}));
    auto out = find_failure_inducing(testing::program("max", put_src),
                                     {testing::reference(1, "ref1"), testing::reference(2, "ref2")},
                                     cfg, llm.ctx, sandbox);
    // Non-failing counted attempts after the last coverage gain.
    int since_gain = 0;
    std::size_t best = 0;
    for (const auto& rec : out.trace) {
      if (!rec.counted) continue;
      if (rec.coverage_arcs > best) {
        best = rec.coverage_arcs;
        since_gain = 0;
      } else {
        ++since_gain;
      }
    }
    return std::pair{out.status == PipelineStatus::NotFoundCoverageSaturated && since_gain <= window,
                     out.details.value("attempts", -1)};
  };
  std::string calls;
  for (int i = 0; i < 20; ++i) calls += "f(" + std::to_string(i % 2 ? i : 0) + ", 3)\n";
  auto [branch_ok, branch_attempts] = saturation(kBranchPut, true, "f(1, 2)\nf(5, 3)\n" + calls, 5);
  // Straight-line code saturates through the window rule.
  const std::string line_put = "def f(a, b):\n    return max(a, b)\n";
  auto [window_ok, window_attempts] = saturation(line_put, false, calls, 4);

  std::ostringstream d;
  d << runs << " randomized runs: " << over_budget << " over k, " << non_monotone
    << " coverage decreases; branch fixture saturated after " << branch_attempts
    << " attempts, window fixture after " << window_attempts << " (window 4)";
  return {runs == kStoppingFixtures && over_budget == 0 && non_monotone == 0 && branch_ok &&
              window_ok && branch_attempts == 2 && window_attempts == 5,
          d.str()};
}

// 6. Hand-built 3 x 10 table.
Result metrics_arithmetic() {
  RunTable t;
  t.runs = 10;
  t.subjects = {"alpha", "beta", "gamma"};
  t.techniques = {kDiffPrompt};
  // Per subject, the ten runs; "-" means not found.
  const std::map<std::string, std::vector<std::string>> runs{
      {"alpha", {"FT-IA", "FT-IA", "FT-IA", "FT-IA", "FT-IA", "FT-IA", "FT-Ia", "-", "-", "-"}},
      {"beta", {"FT-IA", "PT*", "FT-ia", "IT", "FT-IA", "-", "-", "-", "-", "-"}},
      {"gamma", {"-", "-", "-", "-", "-", "-", "-", "-", "-", "PT"}}};
  for (const auto& [subject, labels] : runs)
    for (int r = 0; r < 10; ++r) {
      CellOutcome c;
      c.run = r;
      const auto& l = labels[static_cast<size_t>(r)];
      if (l == "-") {
        c.status = "not_found_attempts_exhausted";
      } else {
        c.status = "found";
        bool masking = l == "PT*";
        c.verdicts.push_back({*parse_category(masking ? "PT" : l), masking});
        c.assertion = "f(" + std::to_string(r) + ") == 0";
      }
      t.at(subject, kDiffPrompt).push_back(c);
    }
  // By hand: FT-IA = 6 + 2 + 0 = 8 of 30 executions; found = 7 + 5 + 1 = 13.
  const double want_success = 8.0 / 30.0, want_accuracy = 8.0 / 13.0;
  const double want_alpha = 0.6, want_beta_accuracy = 0.4;
  double success = success_rate(t, kDiffPrompt, t.subjects);
  double acc = accuracy(t, kDiffPrompt, t.subjects);
  double alpha = success_rate(t, kDiffPrompt, {"alpha"});
  double beta_acc = accuracy(t, kDiffPrompt, {"beta"});
  bool numbers = std::fabs(success - want_success) <= kMetricsTolerance &&
                 std::fabs(acc - want_accuracy) <= kMetricsTolerance &&
                 std::fabs(alpha - want_alpha) <= kMetricsTolerance &&
                 std::fabs(beta_acc - want_beta_accuracy) <= kMetricsTolerance;

  blackbox::TempDir dir;
  for (const auto& subject : t.subjects)
    for (const auto& c : t.at(subject, kDiffPrompt)) {
      auto p = cell_dir(dir.path(), subject, kDiffPrompt, c.run) / "outcome.json";
      fs::create_directories(p.parent_path());
      std::ofstream(p) << Value{{"evaluation", cell_evaluation_json(c)}}.dump();
    }
  write_reports(t, dir.path());
  std::string written = read_text(dir.path() / "report.csv");
  regenerate_reports(dir.path());
  std::string again = read_text(dir.path() / "report.csv");
  regenerate_reports(dir.path());
  bool identical = written == again && again == read_text(dir.path() / "report.csv");

  std::ostringstream d;
  d.precision(15);
  d << "success " << success << " (want " << want_success << "), accuracy " << acc << " (want "
    << want_accuracy << "), report.csv regeneration " << (identical ? "byte-identical" : "DIFFERS");
  return {numbers && identical, d.str()};
}

// 7. Two eval --replay runs over the fixture corpus.
Result replay_determinism() {
  blackbox::TempDir out;
  auto t0 = Clock::now();
  std::string args = "eval " + q(fixtures() / "corpus") + " --no-env --replay " +
                     q(fixtures() / "corpus_cassettes") +
                     " --runs 2 --technique diffprompt,base_chatgpt --out " + q(out.path());
  auto a = blackbox::run(DFO_CLI, args + " --workers 1");
  std::string first = blackbox::slurp(out.path() / "report.json");
  auto b = blackbox::run(DFO_CLI, args + " --workers 3");
  std::string second = blackbox::slurp(out.path() / "report.json");
  double secs = seconds_since(t0);
  int subjects = 0;
  for (const auto& e : fs::directory_iterator(fixtures() / "corpus"))
    if (e.is_directory()) ++subjects;
  Value report = first.empty() ? Value() : Value::parse(first, nullptr, false);
  bool errors = report.is_discarded() || first.find("\"error\"") != std::string::npos;
  std::ostringstream d;
  d << subjects << " subjects, R=2, both techniques, exit codes " << a.code << "/" << b.code
    << ", report.json " << (first == second && !first.empty() ? "byte-identical" : "DIFFERS")
    << ", " << secs << " s";
  return {a.code == 0 && b.code == 0 && !first.empty() && first == second && subjects >= 3 &&
              !errors && secs < kReplaySeconds,
          d.str()};
}

// 9. A "no bug is found" answer stops both direct-prompting techniques.
Result no_bug_claims() {
  auto put = load_subject(fixtures() / "gcd_buggy");
  auto prompts = PromptLibrary::load(testing::templates_dir());
  LlmClient client;
  TableSandbox sandbox;

  auto baseline_cassette = Cassette::open_replay(fixtures() / "cassettes" / "no_bug.jsonl");
  LlmContext baseline_ctx{client, baseline_cassette, prompts, PromptSettings{}, AnswerKeywords{}};
  auto baseline = base_chatgpt_find(put, baseline_ctx);

  auto strawman_cassette = Cassette::open_replay(fixtures() / "cassettes" / "no_bug.jsonl");
  LlmContext strawman_ctx{client, strawman_cassette, prompts, PromptSettings{}, AnswerKeywords{}};
  auto strawman = strawman_generate(put, GenerationConfig{}, strawman_ctx, sandbox);

  std::ostringstream d;
  d << "base_chatgpt " << to_string(baseline.status) << "/" << baseline.disposition
    << ", strawman " << to_string(strawman.outcome);
  return {!baseline.found() && baseline.disposition == "no_bug_claimed" &&
              strawman.outcome == StrawmanOutcome::NoBugClaimed && strawman.versions.empty() &&
              to_string(strawman.outcome) == "no_bug_claimed",
          d.str()};
}

}  // namespace
}  // namespace difforacle

int main() {
  using namespace difforacle;
  const std::vector<std::pair<int, std::function<Result()>>> criteria{
      {1, running_example},     {2, taxonomy_oracle},    {3, consensus_soundness},
      {4, shared_bug_reproduction}, {5, stopping_contracts}, {6, metrics_arithmetic},
      {7, replay_determinism},  {9, no_bug_claims}};
  int failed = 0;
  for (const auto& [n, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::printf("%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", n, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
