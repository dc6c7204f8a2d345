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

// PNG encode/decode through libpng, plus the mask and code-value helpers.

#include <png.h>

#include <algorithm>
#include <csetjmp>
#include <cmath>
#include <cstring>

#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"

namespace polarsfp::io {

namespace {

struct WriteBuffer {
  std::string bytes;
};

void append_bytes(png_structp png, png_bytep data, png_size_t len) {
  auto* buf = static_cast<WriteBuffer*>(png_get_io_ptr(png));
  buf->bytes.append(reinterpret_cast<const char*>(data), len);
}

void flush_nothing(png_structp) {}

struct ReadBuffer {
  std::string_view bytes;
  std::size_t pos = 0;
};

void consume_bytes(png_structp png, png_bytep out, png_size_t len) {
  auto* buf = static_cast<ReadBuffer*>(png_get_io_ptr(png));
  if (buf->pos + len > buf->bytes.size()) png_error(png, "unexpected end of PNG data");
  std::memcpy(out, buf->bytes.data() + buf->pos, len);
  buf->pos += len;
}

int color_type_for(int channels) {
  switch (channels) {
    case 1: return PNG_COLOR_TYPE_GRAY;
    case 3: return PNG_COLOR_TYPE_RGB;
    case 4: return PNG_COLOR_TYPE_RGBA;
    default: throw ParameterError("PNG stores 1, 3 or 4 channels, got " + std::to_string(channels));
  }
}

// `rows` points at big-endian sample rows ready for libpng.
bool encode_rows(WriteBuffer& buf, int width, int height, int bit_depth, int color_type,
                 std::vector<png_bytep>& rows, std::string& err) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    err = "png_create_write_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    err = "libpng encode failure";
    return false;
  }
  png_set_write_fn(png, &buf, append_bytes, flush_nothing);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
               bit_depth, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

template <typename T>
std::string encode_any(const IntImage<T>& img) {
  constexpr int depth = sizeof(T) * 8;
  const int color_type = color_type_for(img.channels);
  if (img.width <= 0 || img.height <= 0) throw ParameterError("cannot encode an empty PNG");
  const std::size_t row_bytes = static_cast<std::size_t>(img.width) * img.channels * sizeof(T);
  std::vector<unsigned char> raw(row_bytes * img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    if constexpr (sizeof(T) == 1) {
      raw[i] = img.data[i];
    } else {
      raw[2 * i] = static_cast<unsigned char>(img.data[i] >> 8);
      raw[2 * i + 1] = static_cast<unsigned char>(img.data[i] & 0xff);
    }
  }
  std::vector<png_bytep> rows(img.height);
  for (int r = 0; r < img.height; ++r) rows[r] = raw.data() + r * row_bytes;
  WriteBuffer buf;
  std::string err;
  if (!encode_rows(buf, img.width, img.height, depth, color_type, rows, err)) throw FormatError(err);
  return std::move(buf.bytes);
}

struct Decoded {
  int width = 0, height = 0, channels = 0, depth = 0;
  std::vector<unsigned char> raw;
};

bool decode_rows(ReadBuffer& buf, Decoded& out, std::string& err) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    err = "png_create_read_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    err = "malformed PNG data";
    return false;
  }
  png_set_read_fn(png, &buf, consume_bytes);
  png_read_info(png, info);
  const int color = png_get_color_type(png, info);
  const int depth = png_get_bit_depth(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  const int passes = png_set_interlace_handling(png);
  png_read_update_info(png, info);
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.channels = png_get_channels(png, info);
  out.depth = png_get_bit_depth(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  out.raw.assign(row_bytes * out.height, 0);
  for (int pass = 0; pass < passes; ++pass) {
    for (int r = 0; r < out.height; ++r) {
      png_read_row(png, out.raw.data() + r * row_bytes, nullptr);
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

Decoded decode(std::string_view bytes) {
  if (bytes.size() < 8 || png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8) != 0) {
    throw MalformedHeaderError("not a PNG file");
  }
  ReadBuffer buf{bytes};
  Decoded d;
  std::string err;
  if (!decode_rows(buf, d, err)) throw FormatError(err);
  return d;
}

}  // namespace

std::string encode_png(const ByteImage& img) { return encode_any(img); }
std::string encode_png(const WordImage& img) { return encode_any(img); }

void write_png(const fs::path& path, const ByteImage& img) { write_file_atomic(path, encode_png(img)); }
void write_png(const fs::path& path, const WordImage& img) { write_file_atomic(path, encode_png(img)); }

ByteImage read_png8(const fs::path& path) {
  const Decoded d = decode(read_file(path));
  if (d.depth != 8) throw FormatError(path.string() + ": expected an 8-bit PNG");
  ByteImage img(d.height, d.width, d.channels);
  std::memcpy(img.data.data(), d.raw.data(), img.data.size());
  return img;
}

WordImage read_png16(const fs::path& path) {
  const Decoded d = decode(read_file(path));
  if (d.depth != 16) throw FormatError(path.string() + ": expected a 16-bit PNG");
  WordImage img(d.height, d.width, d.channels);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    img.data[i] = static_cast<std::uint16_t>((d.raw[2 * i] << 8) | d.raw[2 * i + 1]);
  }
  return img;
}

void write_code_png(const fs::path& path, const Image& quantized, int bits) {
  if (bits < 1 || bits > 16) throw ParameterError("code bits must be in [1, 16]");
  const double levels = static_cast<double>((1u << bits) - 1u);
  const int shift = 16 - bits;
  WordImage img(quantized.height(), quantized.width(), quantized.channels());
  const auto v = quantized.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double code = std::round(std::clamp(static_cast<double>(v[i]), 0.0, 1.0) * levels);
    img.data[i] = static_cast<std::uint16_t>(static_cast<unsigned>(code) << shift);
  }
  write_png(path, img);
}

Image read_code_png(const fs::path& path, int bits) {
  if (bits < 1 || bits > 16) throw ParameterError("code bits must be in [1, 16]");
  const WordImage img = read_png16(path);
  const double levels = static_cast<double>((1u << bits) - 1u);
  const int shift = 16 - bits;
  Image out(img.height, img.width, img.channels);
  auto o = out.values();
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = static_cast<float>((img.data[i] >> shift) / levels);
  }
  return out;
}

void write_mask(const fs::path& path, const ForegroundMask& mask) {
  ByteImage img(mask.height(), mask.width(), 1);
  const auto bits = mask.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) img.data[i] = bits[i] ? 255 : 0;
  write_png(path, img);
}

ForegroundMask read_mask(const fs::path& path) {
  const ByteImage img = read_png8(path);
  ForegroundMask mask(img.height, img.width);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) mask.set(r, c, img.at(r, c, 0) != 0);
  }
  return mask;
}

}  // namespace polarsfp::io
