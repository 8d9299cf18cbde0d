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

#include "testgen/testgen.hpp"

#include <deque>
#include <set>

#include "core/errors.hpp"
#include "testgen/coverage.hpp"
#include "testgen/inputs.hpp"

namespace difforacle {

void TestGenConfig::validate() const {
  if (k_attempts < 1) throw ConfigError("k must be at least 1");
  if (saturation_window < 1) throw ConfigError("saturation_window must be at least 1");
  if (inputs_per_prompt < 1) throw ConfigError("inputs_per_prompt must be at least 1");
  if (timeout_ms < 1) throw ConfigError("timeout_ms must be positive");
  if (discard_cap_factor < 1) throw ConfigError("discard_cap_factor must be at least 1");
}

Consensus consensus_expected(const TestInput& input, const std::vector<ReferenceVersion>& refs,
                             Sandbox& sandbox, int timeout_ms) {
  if (refs.size() < 2) throw ConfigError("consensus needs at least two reference versions");
  Consensus c;
  bool timed_out = false;
  bool illegal = false;
  for (const auto& ref : refs) {
    c.ref_outputs.push_back(sandbox.execute(ref.source, ref.entry_point, input.args, timeout_ms));
    timed_out = timed_out || c.ref_outputs.back().status == ExecStatus::Timeout;
    illegal = illegal || c.ref_outputs.back().status == ExecStatus::IllegalInput;
  }
  if (illegal) {
    c.failure = Disposition::Illegal;
    return c;
  }
  if (timed_out) {
    c.failure = Disposition::Timeout;
    return c;
  }
  for (std::size_t i = 1; i < c.ref_outputs.size(); ++i)
    if (!results_equal(c.ref_outputs[0], c.ref_outputs[i])) return c;
  c.expected = observed_output(c.ref_outputs[0]);
  return c;
}

namespace {

// Repeat executions agree, counting a repeated timeout as agreement.
bool reproducible(const ExecutionResult& a, const ExecutionResult& b) {
  if (a.status == ExecStatus::Timeout || b.status == ExecStatus::Timeout)
    return a.status == b.status;
  return results_equal(a, b);
}

}  // namespace

PipelineOutcome find_failure_inducing(const ProgramUnderTest& put,
                                      const std::vector<ReferenceVersion>& refs,
                                      const TestGenConfig& cfg, LlmContext& llm,
                                      Sandbox& sandbox) {
  cfg.validate();
  if (refs.size() < 2) throw ConfigError("differential testing needs at least two references");
  for (const auto& r : refs)
    if (!r.compilable) throw ConfigError("reference version " + std::to_string(r.index) + " does not compile");

  PipelineOutcome out;
  out.put_id = put.id;
  out.entry_point = put.entry_point;

  const std::set<int> branch_points = static_branch_points(put.source);
  const int discard_cap = cfg.discard_cap_factor * cfg.k_attempts;

  std::deque<TestInput> queue;
  std::set<std::string> tried;
  CoverageSet covered;
  int attempts = 0;
  int discarded = 0;
  int empty_rounds = 0;
  int stale = 0;  // consecutive consensus_same attempts without new arcs
  int prompts = 0;
  int parse_warnings = 0;

  auto finish = [&](PipelineStatus status) {
    out.status = status;
    out.details["attempts"] = attempts;
    out.details["discarded"] = discarded;
    out.details["input_prompts"] = prompts;
    out.details["parse_warnings"] = parse_warnings;
    out.details["coverage_arcs"] = covered.size();
    out.details["branch_points"] = branch_points.size();
    out.details["branch_coverage"] = branch_coverage_ratio(covered, branch_points);
    return out;
  };

  while (true) {
    if (queue.empty()) {
      std::vector<TestInput> fresh;
      try {
        ++prompts;
        auto parsed = generate_inputs(put, llm, cfg.inputs_per_prompt);
        parse_warnings += parsed.warnings;
        for (auto& in : parsed.inputs)
          if (!tried.count(canonical(Value(in.args)))) fresh.push_back(std::move(in));
      } catch (const NoParsableInputs&) {
      }
      if (fresh.empty()) {
        if (++empty_rounds >= 2) return finish(PipelineStatus::NotFoundInputsExhausted);
        continue;
      }
      empty_rounds = 0;
      for (auto& in : fresh) queue.push_back(std::move(in));
    }

    AttemptRecord rec;
    rec.input = std::move(queue.front());
    queue.pop_front();
    tried.insert(canonical(Value(rec.input.args)));

    auto discard = [&](Disposition why) {
      rec.disposition = why;
      rec.counted = cfg.count_discarded;
      if (rec.counted) ++attempts;
      ++discarded;
      rec.coverage_arcs = covered.size();
      out.trace.push_back(std::move(rec));
    };

    if (!input_well_typed(rec.input.args, put.param_types)) {
      discard(Disposition::Illegal);
    } else {
      Consensus consensus = consensus_expected(rec.input, refs, sandbox, cfg.timeout_ms);
      rec.ref_outputs = std::move(consensus.ref_outputs);
      if (!consensus.expected) {
        discard(consensus.failure);
      } else {
        ++attempts;
        rec.counted = true;
        ExecutionResult put_out =
            sandbox.execute(put.source, put.entry_point, rec.input.args, cfg.timeout_ms);
        auto put_value = observed_output(put_out);
        bool differs = !put_value || !output_equal(*put_value, *consensus.expected);
        if (differs) {
          ExecutionResult again =
              sandbox.execute(put.source, put.entry_point, rec.input.args, cfg.timeout_ms);
          if (!reproducible(put_out, again))
            throw NondeterministicSubject("program '" + put.id +
                                          "' returned different results for " +
                                          canonical(Value(rec.input.args)));
          if (put_out.coverage) covered.merge(*put_out.coverage);
          rec.put_output = std::move(put_out);
          rec.disposition = Disposition::ConsensusDiff;
          rec.coverage_arcs = covered.size();
          out.test_case = TestCase{rec.input, *consensus.expected};
          out.trace.push_back(std::move(rec));
          return finish(PipelineStatus::Found);
        }
        std::size_t added = put_out.coverage ? covered.merge(*put_out.coverage) : 0;
        stale = added > 0 ? 0 : stale + 1;
        rec.put_output = std::move(put_out);
        rec.disposition = Disposition::ConsensusSame;
        rec.coverage_arcs = covered.size();
        out.trace.push_back(std::move(rec));
        if (branch_coverage_complete(covered, branch_points) || stale >= cfg.saturation_window)
          return finish(PipelineStatus::NotFoundCoverageSaturated);
      }
    }
    if (attempts >= cfg.k_attempts || discarded >= discard_cap)
      return finish(PipelineStatus::NotFoundAttemptsExhausted);
  }
}

}  // namespace difforacle
