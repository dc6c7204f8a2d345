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

#include "polarsfp/keyvalue.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "polarsfp/error.hpp"

namespace polarsfp::kv {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError("config key '" + std::string(key) + "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::pair<std::string, std::string>> parse(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (!seen.insert(key).second) throw ConfigError("duplicate config key '" + key + "'");
    out.emplace_back(std::move(key), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

double to_double(std::string_view key, std::string_view value) {
  return parse_number<double>(key, value);
}

int to_int(std::string_view key, std::string_view value) { return parse_number<int>(key, value); }

std::uint64_t to_u64(std::string_view key, std::string_view value) {
  return parse_number<std::uint64_t>(key, value);
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected boolean, got '" +
                    std::string(value) + "'");
}

std::vector<int> to_int_list(std::string_view key, std::string_view value) {
  std::vector<int> out;
  std::string_view rest = value;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(to_int(key, trim(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace polarsfp::kv
