// Copyright 2026 The polarsfp Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polarsfp::kv {

/// Ordered `key = value` pairs from flat config text. Blank lines and lines
/// starting with '#' are skipped. Throws ConfigError on malformed lines or
/// duplicate keys.
std::vector<std::pair<std::string, std::string>> parse(std::string_view text);

/// Value parsers; each throws ConfigError naming the key on failure.
double to_double(std::string_view key, std::string_view value);
int to_int(std::string_view key, std::string_view value);
std::uint64_t to_u64(std::string_view key, std::string_view value);
bool to_bool(std::string_view key, std::string_view value);
std::vector<int> to_int_list(std::string_view key, std::string_view value);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

std::string_view trim(std::string_view s) noexcept;
std::string lower(std::string_view s);

}  // namespace polarsfp::kv
