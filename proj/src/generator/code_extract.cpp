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

#include "generator/code_extract.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace difforacle {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

std::string join(const std::vector<std::string>& lines, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    out += lines[i];
    out += '\n';
  }
  return out;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<std::string> def_name(std::string_view line) {
  std::string_view rest;
  if (line.rfind("def ", 0) == 0) rest = line.substr(4);
  else if (line.rfind("async def ", 0) == 0) rest = line.substr(10);
  else return std::nullopt;
  std::size_t b = rest.find_first_not_of(' ');
  if (b == std::string_view::npos) return std::nullopt;
  std::size_t e = b;
  while (e < rest.size() && ident_char(rest[e])) ++e;
  if (e == b) return std::nullopt;
  return std::string(rest.substr(b, e - b));
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

}  // namespace

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

namespace {
std::vector<std::string> fenced_blocks(std::string_view text, bool python_only) {
  auto lines = split_lines(text);
  std::vector<std::string> blocks;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string head = trim(lines[i]);
    if (head.rfind("```", 0) != 0) continue;
    std::string lang = trim(head.substr(3));
    std::transform(lang.begin(), lang.end(), lang.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::size_t j = i + 1;
    while (j < lines.size() && trim(lines[j]).rfind("```", 0) != 0) ++j;
    if (!python_only || lang.empty() || lang == "python" || lang == "py" || lang == "python3") {
      std::string body = join(lines, i + 1, j);
      if (!trim(body).empty()) blocks.push_back(std::move(body));
    }
    i = j;
  }
  return blocks;
}

}  // namespace

std::vector<std::string> fenced_code_blocks(std::string_view text) {
  return fenced_blocks(text, true);
}

std::vector<std::string> all_fenced_blocks(std::string_view text) {
  return fenced_blocks(text, false);
}

std::vector<std::string> heuristic_function_chunks(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::string> chunks;
  std::size_t i = 0;
  while (i < lines.size()) {
    auto name = def_name(lines[i]);
    if (!name) {
      ++i;
      continue;
    }
    std::size_t start = i++;
    std::size_t last_code = start;
    while (i < lines.size()) {
      const auto& line = lines[i];
      if (blank(line)) {
        ++i;
        continue;
      }
      if (line[0] == ' ' || line[0] == '\t') {
        last_code = i++;
        continue;
      }
      auto other = def_name(line);
      if (other && *other != *name) {
        last_code = i++;
        continue;
      }
      break;
    }
    chunks.push_back(join(lines, start, last_code + 1));
  }
  return chunks;
}

std::vector<std::string> extract_code(std::string_view text) {
  auto blocks = fenced_code_blocks(text);
  if (!blocks.empty()) return blocks;
  return heuristic_function_chunks(text);
}

std::optional<std::string> first_top_level_function(std::string_view source) {
  for (const auto& line : split_lines(source))
    if (auto n = def_name(line)) return n;
  return std::nullopt;
}

bool defines_top_level_function(std::string_view source, std::string_view name) {
  for (const auto& line : split_lines(source))
    if (auto n = def_name(line); n && *n == name) return true;
  return false;
}

std::string rename_identifier(std::string_view source, std::string_view from, std::string_view to) {
  std::string out;
  out.reserve(source.size());
  std::size_t i = 0;
  while (i < source.size()) {
    if (source.compare(i, from.size(), from) == 0 && (i == 0 || !ident_char(source[i - 1])) &&
        (i + from.size() >= source.size() || !ident_char(source[i + from.size()]))) {
      out += to;
      i += from.size();
    } else {
      out += source[i++];
    }
  }
  return out;
}

std::string normalize_entry_point(std::string_view source, std::string_view entry_point) {
  if (defines_top_level_function(source, entry_point)) return std::string(source);
  auto first = first_top_level_function(source);
  if (!first) return std::string(source);
  return rename_identifier(source, *first, entry_point);
}

std::string extract_intention_text(std::string_view reply) {
  std::string lowered(reply);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto at = lowered.find("intention:");
  if (at != std::string::npos) return trim(reply.substr(at + 10));
  return trim(reply);
}

}  // namespace difforacle
