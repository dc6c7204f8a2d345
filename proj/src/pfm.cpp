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

// Portable float map reader/writer and atomic file output.

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"

namespace polarsfp::io {

namespace {

// Upper bound on the decoded sample count (1 GiB of floats).
constexpr std::uint64_t kMaxSamples = std::uint64_t{1} << 28;

std::uint32_t bswap32(std::uint32_t v) { return __builtin_bswap32(v); }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

struct Cursor {
  std::string_view bytes;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < bytes.size() && is_space(bytes[pos])) ++pos;
  }
  std::string_view token() {
    skip_space();
    const std::size_t start = pos;
    while (pos < bytes.size() && !is_space(bytes[pos])) ++pos;
    return bytes.substr(start, pos - start);
  }
};

std::uint64_t parse_dimension(std::string_view tok, const char* what) {
  if (tok.empty()) throw MalformedHeaderError(std::string("PFM header: missing ") + what);
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw MalformedHeaderError(std::string("PFM header: bad ") + what + " '" + std::string(tok) + "'");
    }
    if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      throw DimensionOverflowError(std::string("PFM header: ") + what + " overflows");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v == 0) throw MalformedHeaderError(std::string("PFM header: zero ") + what);
  return v;
}

}  // namespace

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string encode_float_image(const Image& img) {
  if (img.channels() != 1 && img.channels() != 3) {
    throw ParameterError("PFM stores 1 or 3 channels, got " + std::to_string(img.channels()));
  }
  if (img.empty()) throw ParameterError("cannot store an empty image as PFM");
  if (!img.all_finite()) throw ParameterError("PFM writer requires finite values");

  std::string out = (img.channels() == 3 ? "PF\n" : "Pf\n") + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n-1.0\n";
  const std::size_t header = out.size();
  const std::size_t row_bytes = static_cast<std::size_t>(img.width()) * img.channels() * 4;
  out.resize(header + row_bytes * img.height());
  char* dst = out.data() + header;
  for (int r = img.height() - 1; r >= 0; --r) {
    const float* src = img.data() + static_cast<std::size_t>(r) * img.width() * img.channels();
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(dst, src, row_bytes);
    } else {
      for (std::size_t i = 0; i < row_bytes / 4; ++i) {
        const auto u = bswap32(std::bit_cast<std::uint32_t>(src[i]));
        std::memcpy(dst + 4 * i, &u, 4);
      }
    }
    dst += row_bytes;
  }
  return out;
}

Image decode_float_image(std::string_view bytes) {
  Cursor cur{bytes};
  const std::string_view magic = cur.token();
  int channels = 0;
  if (magic == "PF") {
    channels = 3;
  } else if (magic == "Pf") {
    channels = 1;
  } else {
    throw MalformedHeaderError("PFM header: bad magic '" + std::string(magic.substr(0, 8)) + "'");
  }
  const std::uint64_t width = parse_dimension(cur.token(), "width");
  const std::uint64_t height = parse_dimension(cur.token(), "height");
  const std::string_view scale_tok = cur.token();
  double scale = 0.0;
  try {
    std::size_t used = 0;
    scale = std::stod(std::string(scale_tok), &used);
    if (used != scale_tok.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw MalformedHeaderError("PFM header: bad scale '" + std::string(scale_tok) + "'");
  }
  if (scale == 0.0 || !std::isfinite(scale)) throw MalformedHeaderError("PFM header: zero scale");
  if (cur.pos >= bytes.size() || !is_space(bytes[cur.pos])) {
    throw MalformedHeaderError("PFM header: missing separator after scale");
  }
  ++cur.pos;

  if (width > static_cast<std::uint64_t>(std::numeric_limits<int>::max()) ||
      height > static_cast<std::uint64_t>(std::numeric_limits<int>::max()) ||
      width * height > kMaxSamples / channels) {
    throw DimensionOverflowError("PFM dimensions " + std::to_string(width) + "x" +
                                 std::to_string(height) + " exceed limits");
  }
  const std::size_t row_bytes = static_cast<std::size_t>(width) * channels * 4;
  const std::size_t need = row_bytes * height;
  const std::size_t have = bytes.size() - cur.pos;
  if (have < need) {
    throw TruncatedPayloadError("PFM payload truncated: expected " + std::to_string(need) +
                                " bytes, found " + std::to_string(have));
  }
  if (have > need) {
    throw FormatError("PFM payload has " + std::to_string(have - need) + " trailing bytes");
  }

  const bool little = scale < 0.0;
  const bool swap = little != (std::endian::native == std::endian::little);
  Image img(static_cast<int>(height), static_cast<int>(width), channels);
  const char* src = bytes.data() + cur.pos;
  for (int r = img.height() - 1; r >= 0; --r) {
    float* dst = &img.at(r, 0, 0);
    std::memcpy(dst, src, row_bytes);
    if (swap) {
      for (std::size_t i = 0; i < row_bytes / 4; ++i) {
        dst[i] = std::bit_cast<float>(bswap32(std::bit_cast<std::uint32_t>(dst[i])));
      }
    }
    src += row_bytes;
  }
  return img;
}

void write_float_image(const fs::path& path, const Image& img) {
  write_file_atomic(path, encode_float_image(img));
}

Image read_float_image(const fs::path& path) { return decode_float_image(read_file(path)); }

}  // namespace polarsfp::io
