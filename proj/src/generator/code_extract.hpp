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
#include <string>
#include <string_view>
#include <vector>

namespace difforacle {

// Bodies of ``` fenced blocks tagged python/py/python3 or untagged.
std::vector<std::string> fenced_code_blocks(std::string_view text);
// Bodies of every ``` fenced block regardless of its language tag.
std::vector<std::string> all_fenced_blocks(std::string_view text);

// Fallback for unfenced replies: runs of column-0 `def` blocks and their
// indented bodies. A second definition of the same name starts a new chunk.
std::vector<std::string> heuristic_function_chunks(std::string_view text);

// Fenced blocks, else the heuristic chunks.
std::vector<std::string> extract_code(std::string_view text);

std::optional<std::string> first_top_level_function(std::string_view source);
bool defines_top_level_function(std::string_view source, std::string_view name);

// Renames every identifier occurrence of `from` to `to`.
std::string rename_identifier(std::string_view source, std::string_view from, std::string_view to);

// Renames the first top-level function to `entry_point` unless the source
// already defines `entry_point` at top level.
std::string normalize_entry_point(std::string_view source, std::string_view entry_point);

// Text after an "Intention:" label when present, else the whole reply,
// trimmed.
std::string extract_intention_text(std::string_view reply);

std::string trim(std::string_view s);

}  // namespace difforacle
