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

#include <optional>
#include <vector>

#include "core/taxonomy.hpp"
#include "llm/context.hpp"
#include "sandbox/sandbox.hpp"
#include "testgen/outcome.hpp"

namespace difforacle {

struct TestGenConfig {
  int k_attempts = 10;
  int saturation_window = 5;
  int inputs_per_prompt = 10;
  int timeout_ms = kDefaultTimeoutMs;
  // Strict accounting: every chosen input consumes an attempt, not only the
  // ones on which the references agree.
  bool count_discarded = false;
  // Discarded inputs are capped at this multiple of k.
  int discard_cap_factor = 10;

  void validate() const;
};

struct Consensus {
  std::optional<Value> expected;
  std::vector<ExecutionResult> ref_outputs;
  // Why there is no consensus: NoConsensus, Timeout or Illegal.
  Disposition failure = Disposition::NoConsensus;
};

// Runs `input` on every reference; the shared output when all agree.
Consensus consensus_expected(const TestInput& input, const std::vector<ReferenceVersion>& refs,
                             Sandbox& sandbox, int timeout_ms = kDefaultTimeoutMs);

// Differential testing of the PUT against reference consensus. Inputs are
// consumed in the order the model emitted them; more are requested when the
// queue runs dry.
PipelineOutcome find_failure_inducing(const ProgramUnderTest& put,
                                      const std::vector<ReferenceVersion>& refs,
                                      const TestGenConfig& cfg, LlmContext& llm,
                                      Sandbox& sandbox);

}  // namespace difforacle
