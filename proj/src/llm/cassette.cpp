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

#include "llm/cassette.hpp"

#include "core/errors.hpp"

namespace difforacle {

std::string_view to_string(CassetteMode m) {
  switch (m) {
    case CassetteMode::Record: return "record";
    case CassetteMode::Replay: return "replay";
    case CassetteMode::Passthrough: return "passthrough";
  }
  return "passthrough";
}

Cassette::Cassette(CassetteMode mode) : mode_(mode) {}

Cassette::Cassette(Cassette&& other) noexcept : mode_(other.mode_) {
  std::lock_guard lock(other.mu_);
  entries_ = std::move(other.entries_);
  by_fingerprint_ = std::move(other.by_fingerprint_);
  cursor_ = std::move(other.cursor_);
  consumed_ = other.consumed_;
  sink_ = std::move(other.sink_);
}

Cassette Cassette::open_replay(const std::filesystem::path& path) {
  Cassette c(CassetteMode::Replay);
  std::ifstream in(path);
  if (!in) return c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Value j = Value::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("fp") || !j.contains("response"))
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": malformed cassette line");
    c.add_entry({j["fp"].get<std::string>(), j.value("request", Value()),
                 chat_response_from_json(j["response"])});
  }
  return c;
}

Cassette Cassette::open_record(const std::filesystem::path& path) {
  Cassette c(CassetteMode::Record);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  c.sink_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!c.sink_) throw IoError("cannot open cassette for recording: " + path.string());
  return c;
}

std::optional<ChatResponse> Cassette::next(const std::string& fingerprint) {
  std::lock_guard lock(mu_);
  auto it = by_fingerprint_.find(fingerprint);
  if (it == by_fingerprint_.end()) return std::nullopt;
  auto& pos = cursor_[fingerprint];
  if (pos >= it->second.size()) return std::nullopt;
  ++consumed_;
  return entries_[it->second[pos++]].response;
}

std::string Cassette::entry_line(const CassetteEntry& e) {
  Value j{{"fp", e.fingerprint}, {"request", e.request}, {"response", to_json(e.response)}};
  return j.dump();
}

void Cassette::add_entry(CassetteEntry entry) {
  std::lock_guard lock(mu_);
  by_fingerprint_[entry.fingerprint].push_back(entries_.size());
  if (sink_.is_open()) {
    sink_ << entry_line(entry) << '\n';
    sink_.flush();
  }
  entries_.push_back(std::move(entry));
}

void Cassette::append(const ChatRequest& request, const ChatResponse& response) {
  add_entry({fingerprint(request), to_json(request), response});
}

std::vector<CassetteEntry> Cassette::entries() const {
  std::lock_guard lock(mu_);
  return entries_;
}

std::size_t Cassette::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::size_t Cassette::consumed() const {
  std::lock_guard lock(mu_);
  return consumed_;
}

void Cassette::save(const std::filesystem::path& path) const {
  std::lock_guard lock(mu_);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot write cassette: " + path.string());
  for (const auto& e : entries_) out << entry_line(e) << '\n';
}

}  // namespace difforacle
