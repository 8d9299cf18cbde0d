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

#include <stdexcept>
#include <string>

namespace difforacle {

// Base of every error raised by the core. `kind()` is the stable name used in
// reports and mapped onto C API status codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DIFFORACLE_DEFINE_ERROR(Name, Base)                           \
  class Name : public Base {                                          \
   public:                                                            \
    explicit Name(const std::string& what) : Base(#Name, what) {}     \
                                                                      \
   protected:                                                         \
    Name(std::string kind, const std::string& what)                   \
        : Base(std::move(kind), what) {}                              \
  };

DIFFORACLE_DEFINE_ERROR(ConfigError, Error)
DIFFORACLE_DEFINE_ERROR(IoError, Error)

// Execution infrastructure failures. Subject exceptions are values, not these.
DIFFORACLE_DEFINE_ERROR(SandboxError, Error)
DIFFORACLE_DEFINE_ERROR(HarnessCrash, SandboxError)

DIFFORACLE_DEFINE_ERROR(AmbiguousVerdict, Error)

DIFFORACLE_DEFINE_ERROR(LlmError, Error)
DIFFORACLE_DEFINE_ERROR(CassetteMiss, LlmError)
DIFFORACLE_DEFINE_ERROR(HttpError, LlmError)
DIFFORACLE_DEFINE_ERROR(RateLimited, HttpError)
DIFFORACLE_DEFINE_ERROR(ScriptExhausted, LlmError)
DIFFORACLE_DEFINE_ERROR(MissingPlaceholder, Error)

DIFFORACLE_DEFINE_ERROR(EmptyIntention, Error)
DIFFORACLE_DEFINE_ERROR(InsufficientVersions, Error)

DIFFORACLE_DEFINE_ERROR(NoParsableInputs, Error)
DIFFORACLE_DEFINE_ERROR(NondeterministicSubject, Error)
DIFFORACLE_DEFINE_ERROR(UnparsableTestCase, Error)

DIFFORACLE_DEFINE_ERROR(IncompleteTable, Error)
DIFFORACLE_DEFINE_ERROR(UndefinedAccuracy, Error)

#undef DIFFORACLE_DEFINE_ERROR

}  // namespace difforacle
