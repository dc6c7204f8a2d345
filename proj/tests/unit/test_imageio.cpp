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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"
#include "temp_dir.hpp"

namespace polarsfp::io {
namespace {

using polarsfp::testing::bit_equal;
using polarsfp::testing::TempDir;

// Independent PFM writer used as an oracle for the header and payload layout.
std::string oracle_pfm(const Image& img, bool little_endian = true) {
  std::string out = (img.channels() == 3 ? "PF\n" : "Pf\n") + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n" + (little_endian ? "-1.0\n" : "1.0\n");
  for (int r = img.height() - 1; r >= 0; --r) {
    for (int c = 0; c < img.width(); ++c) {
      for (int k = 0; k < img.channels(); ++k) {
        unsigned char b[4];
        const float v = img.at(r, c, k);
        std::memcpy(b, &v, 4);  // host is little-endian
        if (!little_endian) std::swap(b[0], b[3]), std::swap(b[1], b[2]);
        out.append(reinterpret_cast<const char*>(b), 4);
      }
    }
  }
  return out;
}

TEST(FloatImage, SmallConstantExample) {
  const Image img(2, 2, 1, 0.25f);
  const std::string bytes = encode_float_image(img);
  EXPECT_EQ(bytes, oracle_pfm(img));
  EXPECT_EQ(bytes.size(), std::string("Pf\n2 2\n-1.0\n").size() + 16);
  EXPECT_EQ(decode_float_image(bytes), img);
}

TEST(FloatImage, RowOrderIsBottomUp) {
  Image img(2, 1, 1);
  img.at(0, 0) = 1.0f;  // top
  img.at(1, 0) = 2.0f;  // bottom
  const std::string bytes = encode_float_image(img);
  float first;
  std::memcpy(&first, bytes.data() + bytes.size() - 8, 4);
  EXPECT_EQ(first, 2.0f);
}

TEST(FloatImage, FullSizeRoundTripOnDisk) {
  TempDir dir;
  const Image img = polarsfp::testing::random_image(512, 612, 3, 7, -1.0, 1.0);
  write_float_image(dir / "s1.pfm", img);
  EXPECT_TRUE(bit_equal(read_float_image(dir / "s1.pfm"), img));
  EXPECT_EQ(read_file(dir / "s1.pfm"), oracle_pfm(img));
}

TEST(FloatImage, FuzzedBitPatternsRoundTrip) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const Image img = polarsfp::testing::random_bits_image(gen);
    ASSERT_TRUE(bit_equal(decode_float_image(encode_float_image(img)), img)) << i;
  }
}

TEST(FloatImage, ReadsBigEndian) {
  const Image img = polarsfp::testing::random_image(3, 5, 3, 2);
  EXPECT_TRUE(bit_equal(decode_float_image(oracle_pfm(img, false)), img));
}

TEST(FloatImage, ScaleMagnitudeIgnored) {
  std::string bytes = oracle_pfm(Image(1, 1, 1, 0.5f));
  bytes.replace(bytes.find("-1.0"), 4, "-3.5");
  EXPECT_EQ(decode_float_image(bytes).at(0, 0), 0.5f);
}

TEST(FloatImage, TruncatedPayload) {
  const std::string full = oracle_pfm(Image(4, 5, 3, 1.0f));
  EXPECT_THROW(decode_float_image(full.substr(0, full.size() - 5 * 3 * 4)), TruncatedPayloadError);
  EXPECT_THROW(decode_float_image(full.substr(0, full.size() - 1)), TruncatedPayloadError);
}

TEST(FloatImage, MalformedHeaders) {
  for (const char* bad : {"", "P6\n1 1\n-1.0\n", "PF\n1\n", "PF\nx 1\n-1.0\n", "PF\n1 1\nabc\n",
                          "PF\n0 1\n-1.0\n", "PF\n1 1\n0.0\n", "PF\n-2 1\n-1.0\n",
                          "PF\n1 1\n-1.0"}) {
    EXPECT_THROW(decode_float_image(bad), MalformedHeaderError) << '"' << bad << '"';
  }
}

TEST(FloatImage, DimensionOverflow) {
  EXPECT_THROW(decode_float_image("PF\n99999999999999999999 1\n-1.0\n"), DimensionOverflowError);
  EXPECT_THROW(decode_float_image("PF\n1000000 1000000\n-1.0\n"), DimensionOverflowError);
}

TEST(FloatImage, ErrorClassesAreDistinct) {
  EXPECT_FALSE((std::is_base_of_v<TruncatedPayloadError, MalformedHeaderError>));
  EXPECT_FALSE((std::is_base_of_v<MalformedHeaderError, DimensionOverflowError>));
  EXPECT_TRUE((std::is_base_of_v<FormatError, DimensionOverflowError>));
}

TEST(FloatImage, WriterPreconditions) {
  TempDir dir;
  EXPECT_THROW(encode_float_image(Image(2, 2, 2)), ParameterError);
  EXPECT_THROW(encode_float_image(Image(2, 2, 1, NAN)), ParameterError);
  EXPECT_THROW(read_float_image(dir / "missing.pfm"), IoError);
}

TEST(FloatImage, DeterministicBytes) {
  const Image img = polarsfp::testing::random_image(9, 4, 1, 3);
  EXPECT_EQ(encode_float_image(img), encode_float_image(img));
}

TEST(Png, RoundTrip8And16) {
  TempDir dir;
  ByteImage b(7, 5, 3);
  WordImage w(6, 9, 1);
  std::mt19937_64 gen(1);
  for (auto& v : b.data) v = static_cast<std::uint8_t>(gen());
  for (auto& v : w.data) v = static_cast<std::uint16_t>(gen());
  write_png(dir / "b.png", b);
  write_png(dir / "w.png", w);
  EXPECT_EQ(read_png8(dir / "b.png"), b);
  EXPECT_EQ(read_png16(dir / "w.png"), w);
  EXPECT_THROW(read_png16(dir / "b.png"), FormatError);
  EXPECT_EQ(encode_png(b), encode_png(b));
}

TEST(Png, NotAPng) {
  TempDir dir;
  write_file_atomic(dir / "x.png", "hello, world");
  EXPECT_THROW(read_png8(dir / "x.png"), MalformedHeaderError);
}

TEST(Png, CodeImagesAreLeftAligned) {
  TempDir dir;
  Image q(2, 3, 1);
  for (int i = 0; i < 6; ++i) q.values()[i] = static_cast<float>(i * 800 / 4095.0);
  q.values()[5] = 1.0f;
  write_code_png(dir / "q.png", q, 12);
  const WordImage raw = read_png16(dir / "q.png");
  for (int i = 0; i < 5; ++i) EXPECT_EQ(raw.data[i], (i * 800) << 4);
  EXPECT_EQ(raw.data[5], 4095 << 4);
  EXPECT_EQ(read_code_png(dir / "q.png", 12), q);
}

TEST(Mask, RoundTripExact) {
  TempDir dir;
  ForegroundMask m(5, 8);
  std::mt19937_64 gen(4);
  for (int r = 0; r < 5; ++r) for (int c = 0; c < 8; ++c) m.set(r, c, gen() & 1);
  write_mask(dir / "m.png", m);
  EXPECT_EQ(read_mask(dir / "m.png"), m);
  const ByteImage raw = read_png8(dir / "m.png");
  for (auto v : raw.data) EXPECT_TRUE(v == 0 || v == 255);
}

TEST(NormalEncoding, Examples) {
  NormalMap n(1, 3);
  n.map.at(0, 0, 2) = 1.0f;
  n.map.at(0, 1, 0) = -1.0f;
  ForegroundMask m(1, 3, true);
  m.set(0, 2, false);
  const ByteImage e = encode_normal_image(n, m);
  EXPECT_EQ((std::array{e.at(0, 0, 0), e.at(0, 0, 1), e.at(0, 0, 2)}), (std::array<std::uint8_t, 3>{128, 128, 255}));
  EXPECT_EQ((std::array{e.at(0, 1, 0), e.at(0, 1, 1), e.at(0, 1, 2)}), (std::array<std::uint8_t, 3>{0, 128, 128}));
  EXPECT_EQ((std::array{e.at(0, 2, 0), e.at(0, 2, 1), e.at(0, 2, 2)}), (std::array<std::uint8_t, 3>{128, 128, 128}));
}

TEST(NormalEncoding, RoundTripWithinOneCode) {
  const NormalMap n = polarsfp::testing::random_normal_map(40, 40, 5);
  ForegroundMask m(40, 40, true);
  m.set(3, 3, false);
  const ByteImage e = encode_normal_image(n, m);
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 40; ++c) {
      for (int k = 0; k < 3; ++k) {
        // Oracle: direct inverse of the encoding, before renormalization.
        const double back = e.at(r, c, k) / 255.0 * 2.0 - 1.0;
        if (m(r, c)) {
          EXPECT_LE(std::abs(back - n.map.at(r, c, k)), 1.0 / 255.0);
        }
      }
    }
  }
  const NormalMap d = decode_normal_image(e, m);
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 40; ++c) {
      double len = 0;
      for (int k = 0; k < 3; ++k) len += d.map.at(r, c, k) * d.map.at(r, c, k);
      EXPECT_NEAR(len, m(r, c) ? 1.0 : 0.0, 1e-6);
    }
  }
}

TEST(Colorize, DolpGrayRamp) {
  DolpMap d{Image(1, 3, 1)};
  d.map.at(0, 1) = 0.5f;
  d.map.at(0, 2) = 1.0f;
  const ByteImage g = colorize_dolp(d);
  EXPECT_EQ(g.channels, 1);
  EXPECT_EQ(g.at(0, 0), 0);
  EXPECT_EQ(g.at(0, 2), 255);
  EXPECT_NEAR(g.at(0, 1), 128, 1);
}

TEST(Colorize, ZeroDolpIsBlack) {
  const AolpMap a{polarsfp::testing::random_image(4, 4, 1, 1, -1.5, 1.5)};
  const DolpMap d{Image(4, 4, 1)};
  for (auto v : colorize_aolp(a, &d).data) EXPECT_EQ(v, 0);
  for (auto v : colorize_dolp(d).data) EXPECT_EQ(v, 0);
}

TEST(Colorize, ConstantAolpConstantHue) {
  const AolpMap a{Image(6, 7, 1, 0.3f)};
  const ByteImage rgb = colorize_aolp(a);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 7; ++c) {
      for (int k = 0; k < 3; ++k) EXPECT_EQ(rgb.at(r, c, k), rgb.at(0, 0, k));
    }
  }
}

TEST(Colorize, HueWheelWrapsAround) {
  AolpMap a{Image(1, 3, 1)};
  a.map.at(0, 0) = static_cast<float>(-std::numbers::pi / 2 + 1e-4);
  a.map.at(0, 1) = static_cast<float>(std::numbers::pi / 2);
  a.map.at(0, 2) = 0.0f;
  const ByteImage rgb = colorize_aolp(a);
  int near = 0, far = 0;
  for (int k = 0; k < 3; ++k) {
    near = std::max(near, std::abs(rgb.at(0, 0, k) - rgb.at(0, 1, k)));
    far = std::max(far, std::abs(rgb.at(0, 0, k) - rgb.at(0, 2, k)));
  }
  EXPECT_LE(near, 1);
  EXPECT_GE(far, 200);
}

TEST(Manifest, FormatParseRoundTrip) {
  Manifest m;
  m.records.push_back({"scene_00000", "train", {{"s0", "scene_00000_s0.pfm"}, {"mask", "m/scene_00000_mask.png"}}});
  m.records.push_back({"scene_00001", "test", {{"normal", "scene_00001_normal.pfm"}}});
  const std::string text = format_manifest(m);
  EXPECT_EQ(text.substr(0, kManifestHeader.size()), kManifestHeader);
  EXPECT_EQ(parse_manifest(text), m);
  TempDir dir;
  write_manifest(dir / "manifest.txt", m);
  const Manifest back = read_manifest(dir / "manifest.txt");
  EXPECT_EQ(back, m);
  EXPECT_EQ(resolve_plane(dir.path(), *back.find("scene_00000"), "mask"),
            dir.path() / "m/scene_00000_mask.png");
  EXPECT_THROW(resolve_plane(dir.path(), *back.find("scene_00001"), "s1"), FormatError);
  EXPECT_EQ(back.find("nope"), nullptr);
}

TEST(Manifest, Rejections) {
  const std::string h = std::string(kManifestHeader) + "\n";
  EXPECT_THROW(parse_manifest("a\ttrain\n"), MalformedHeaderError);
  EXPECT_THROW(parse_manifest(h + "a\tholdout\n"), FormatError);
  EXPECT_THROW(parse_manifest(h + "a\ttrain\ns0\n"), FormatError);
  EXPECT_THROW(parse_manifest(h + "a\ttrain\ts0=x\ts0=y\n"), FormatError);
  EXPECT_THROW(parse_manifest(h + "a\ttrain\na\tval\n"), FormatError);
  EXPECT_NO_THROW(parse_manifest(h + "\n# comment\na\tval\n"));
}

TEST(Naming, PlaneFilename) {
  EXPECT_EQ(plane_filename("scene_00003", "s1", "pfm"), "scene_00003_s1.pfm");
}

TEST(AtomicWrite, NoTemporaryLeftBehind) {
  TempDir dir;
  write_file_atomic(dir / "a.bin", "xyz");
  EXPECT_EQ(read_file(dir / "a.bin"), "xyz");
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++files;
  EXPECT_EQ(files, 1);
}

}  // namespace
}  // namespace polarsfp::io
