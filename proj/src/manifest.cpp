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

#include <sstream>

#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"

namespace polarsfp::io {

namespace {

bool valid_split(std::string_view s) { return s == "train" || s == "val" || s == "test"; }

bool valid_field(std::string_view s) {
  return !s.empty() && s.find_first_of("\t\n\r") == std::string_view::npos;
}

}  // namespace

std::string plane_filename(std::string_view scene_id, std::string_view plane, std::string_view ext) {
  std::string out(scene_id);
  out += '_';
  out += plane;
  out += '.';
  out += ext;
  return out;
}

const ManifestRecord* Manifest::find(std::string_view scene_id) const {
  for (const auto& r : records) {
    if (r.scene_id == scene_id) return &r;
  }
  return nullptr;
}

std::string format_manifest(const Manifest& m) {
  std::string out(kManifestHeader);
  out += '\n';
  for (const auto& rec : m.records) {
    if (!valid_field(rec.scene_id) || rec.scene_id.find('=') != std::string::npos) {
      throw ParameterError("manifest: invalid scene id '" + rec.scene_id + "'");
    }
    if (!valid_split(rec.split)) throw ParameterError("manifest: invalid split '" + rec.split + "'");
    out += rec.scene_id;
    out += '\t';
    out += rec.split;
    for (const auto& [plane, path] : rec.files) {
      if (!valid_field(plane) || !valid_field(path) || plane.find('=') != std::string::npos) {
        throw ParameterError("manifest: invalid file entry for " + rec.scene_id);
      }
      out += '\t';
      out += plane;
      out += '=';
      out += path;
    }
    out += '\n';
  }
  return out;
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!header_seen && line == kManifestHeader) header_seen = true;
      continue;
    }
    if (!header_seen) throw MalformedHeaderError("manifest: missing '" + std::string(kManifestHeader) + "' line");
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    const std::string where = "manifest line " + std::to_string(line_no);
    if (fields.size() < 2) throw FormatError(where + ": expected scene_id and split");
    ManifestRecord rec{fields[0], fields[1], {}};
    if (rec.scene_id.empty()) throw FormatError(where + ": empty scene id");
    if (!valid_split(rec.split)) throw FormatError(where + ": invalid split '" + rec.split + "'");
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == fields[i].size()) {
        throw FormatError(where + ": bad file field '" + fields[i] + "'");
      }
      if (!rec.files.emplace(fields[i].substr(0, eq), fields[i].substr(eq + 1)).second) {
        throw FormatError(where + ": duplicate plane '" + fields[i].substr(0, eq) + "'");
      }
    }
    if (m.find(rec.scene_id)) throw FormatError(where + ": duplicate scene id '" + rec.scene_id + "'");
    m.records.push_back(std::move(rec));
  }
  if (!header_seen) throw MalformedHeaderError("manifest: missing '" + std::string(kManifestHeader) + "' line");
  return m;
}

void write_manifest(const fs::path& path, const Manifest& m) {
  write_file_atomic(path, format_manifest(m));
}

Manifest read_manifest(const fs::path& path) { return parse_manifest(read_file(path)); }

fs::path resolve_plane(const fs::path& manifest_dir, const ManifestRecord& rec, std::string_view plane) {
  const auto it = rec.files.find(std::string(plane));
  if (it == rec.files.end()) {
    throw FormatError("scene " + rec.scene_id + ": manifest lists no '" + std::string(plane) + "' plane");
  }
  return manifest_dir / it->second;
}

}  // namespace polarsfp::io
