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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsfp/image.hpp"

namespace polarsfp::io {

namespace fs = std::filesystem;

/// 8- or 16-bit integer raster, row-major, interleaved channels.
template <typename T>
struct IntImage {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<T> data;

  IntImage() = default;
  IntImage(int h, int w, int c, T fill = T{})
      : height(h), width(w), channels(c), data(static_cast<std::size_t>(h) * w * c, fill) {}

  T& at(int r, int col, int ch = 0) {
    return data[(static_cast<std::size_t>(r) * width + col) * channels + ch];
  }
  T at(int r, int col, int ch = 0) const {
    return data[(static_cast<std::size_t>(r) * width + col) * channels + ch];
  }
  friend bool operator==(const IntImage&, const IntImage&) = default;
};

using ByteImage = IntImage<std::uint8_t>;
using WordImage = IntImage<std::uint16_t>;

// ---------------------------------------------------------------------------
// Atomic file output

/// Writes to a sibling temporary file and renames it over `path` on success.
void write_file_atomic(const fs::path& path, std::string_view bytes);
std::string read_file(const fs::path& path);

// ---------------------------------------------------------------------------
// Portable float map

/// "Pf" for one channel, "PF" for three; little-endian payload, bottom row first.
std::string encode_float_image(const Image& img);
Image decode_float_image(std::string_view bytes);

void write_float_image(const fs::path& path, const Image& img);
Image read_float_image(const fs::path& path);

// ---------------------------------------------------------------------------
// PNG

std::string encode_png(const ByteImage& img);
std::string encode_png(const WordImage& img);
void write_png(const fs::path& path, const ByteImage& img);
void write_png(const fs::path& path, const WordImage& img);
ByteImage read_png8(const fs::path& path);
WordImage read_png16(const fs::path& path);

/// Stores values already on the `bits` quantization grid as left-aligned code
/// values in a 16-bit PNG (code << (16 - bits)).
void write_code_png(const fs::path& path, const Image& quantized, int bits);
Image read_code_png(const fs::path& path, int bits);

/// 8-bit grayscale, 255 = foreground.
void write_mask(const fs::path& path, const ForegroundMask& mask);
ForegroundMask read_mask(const fs::path& path);

// ---------------------------------------------------------------------------
// Normal-map visualization encoding

/// channel = round((n + 1) / 2 * 255), half away from zero. Background zero
/// vectors land on mid-gray (128, 128, 128); the mask tells them apart.
ByteImage encode_normal_image(const NormalMap& n, const ForegroundMask& mask);
/// Inverse mapping, renormalized to unit length on foreground, zero elsewhere.
NormalMap decode_normal_image(const ByteImage& rgb, const ForegroundMask& mask);

// ---------------------------------------------------------------------------
// Cue colorization

/// Hue = (aolp + pi/2) / pi around the HSV wheel. With `dolp`, value = DoLP.
ByteImage colorize_aolp(const AolpMap& aolp, const DolpMap* dolp = nullptr, int channel = 0);
/// Linear gray, 0 -> black, 1 -> white.
ByteImage colorize_dolp(const DolpMap& dolp, int channel = 0);
/// Visualization of a normal map (background mid-gray).
ByteImage colorize_normals(const NormalMap& n);

// ---------------------------------------------------------------------------
// Dataset layout

/// "{scene_id}_{plane}.{ext}", e.g. scene_00003_s1.pfm.
std::string plane_filename(std::string_view scene_id, std::string_view plane,
                           std::string_view ext);

struct ManifestRecord {
  std::string scene_id;
  std::string split;                         // train | val | test
  std::map<std::string, std::string> files;  // plane -> path relative to the manifest
  friend bool operator==(const ManifestRecord&, const ManifestRecord&) = default;
};

struct Manifest {
  std::vector<ManifestRecord> records;

  const ManifestRecord* find(std::string_view scene_id) const;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

inline constexpr std::string_view kManifestHeader = "# polarsfp-manifest 1";

/// One tab-separated record per line: scene_id, split, then plane=path fields.
std::string format_manifest(const Manifest& m);
Manifest parse_manifest(std::string_view text);
void write_manifest(const fs::path& path, const Manifest& m);
Manifest read_manifest(const fs::path& path);

/// Resolves a record's plane path against the manifest directory.
/// Throws FormatError naming the plane if the record does not list it.
fs::path resolve_plane(const fs::path& manifest_dir, const ManifestRecord& rec,
                       std::string_view plane);

}  // namespace polarsfp::io
