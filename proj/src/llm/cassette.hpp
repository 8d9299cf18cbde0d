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
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "llm/chat.hpp"

namespace difforacle {

enum class CassetteMode { Record, Replay, Passthrough };

std::string_view to_string(CassetteMode m);

struct CassetteEntry {
  std::string fingerprint;
  Value request;
  ChatResponse response;
};

// Ordered transcript of chat exchanges. In replay mode identical requests
// consume successive entries with their fingerprint, so a pipeline that asks
// the same question twice gets the two recorded answers in order.
// All member functions are safe to call concurrently.
class Cassette {
 public:
  explicit Cassette(CassetteMode mode = CassetteMode::Passthrough);

  // Loads a JSON Lines transcript. A missing file gives an empty cassette,
  // which fails on first lookup with CassetteMiss.
  static Cassette open_replay(const std::filesystem::path& path);
  // Truncates `path`; every recorded entry is appended and flushed.
  static Cassette open_record(const std::filesystem::path& path);

  Cassette(Cassette&& other) noexcept;
  Cassette& operator=(Cassette&&) = delete;

  CassetteMode mode() const { return mode_; }

  std::optional<ChatResponse> next(const std::string& fingerprint);
  void append(const ChatRequest& request, const ChatResponse& response);
  void add_entry(CassetteEntry entry);

  std::vector<CassetteEntry> entries() const;
  std::size_t size() const;
  std::size_t consumed() const;

  void save(const std::filesystem::path& path) const;

 private:
  static std::string entry_line(const CassetteEntry& e);

  CassetteMode mode_;
  mutable std::mutex mu_;
  std::vector<CassetteEntry> entries_;
  std::map<std::string, std::vector<std::size_t>> by_fingerprint_;
  std::map<std::string, std::size_t> cursor_;
  std::size_t consumed_ = 0;
  std::ofstream sink_;
};

}  // namespace difforacle
