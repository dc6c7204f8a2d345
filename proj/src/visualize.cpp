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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"

namespace polarsfp::io {

namespace {

std::uint8_t to_byte(double unit) {
  return static_cast<std::uint8_t>(std::round(std::clamp(unit, 0.0, 1.0) * 255.0));
}

void check_mask_shape(int h, int w, const ForegroundMask& mask) {
  if (mask.height() != h || mask.width() != w) {
    throw StructuralError("mask shape does not match image");
  }
}

// HSV with full saturation; hue in [0, 1] wraps.
void hsv_to_rgb(double hue, double value, std::uint8_t* rgb) {
  const double h6 = (hue - std::floor(hue)) * 6.0;
  const int sector = static_cast<int>(h6) % 6;
  const double f = h6 - std::floor(h6);
  const double p = 0.0, q = value * (1.0 - f), t = value * f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = value; g = t; b = p; break;
    case 1: r = q; g = value; b = p; break;
    case 2: r = p; g = value; b = t; break;
    case 3: r = p; g = q; b = value; break;
    case 4: r = t; g = p; b = value; break;
    default: r = value; g = p; b = q; break;
  }
  rgb[0] = to_byte(r);
  rgb[1] = to_byte(g);
  rgb[2] = to_byte(b);
}

}  // namespace

ByteImage encode_normal_image(const NormalMap& n, const ForegroundMask& mask) {
  if (n.map.channels() != 3) throw StructuralError("normal map needs 3 channels");
  check_mask_shape(n.height(), n.width(), mask);
  ByteImage out(n.height(), n.width(), 3);
  for (int r = 0; r < n.height(); ++r) {
    for (int c = 0; c < n.width(); ++c) {
      for (int k = 0; k < 3; ++k) {
        const double v = mask(r, c) ? std::clamp(static_cast<double>(n.map.at(r, c, k)), -1.0, 1.0) : 0.0;
        out.at(r, c, k) = to_byte((v + 1.0) / 2.0);
      }
    }
  }
  return out;
}

NormalMap decode_normal_image(const ByteImage& rgb, const ForegroundMask& mask) {
  if (rgb.channels < 3) throw StructuralError("normal image needs 3 channels");
  check_mask_shape(rgb.height, rgb.width, mask);
  NormalMap n(rgb.height, rgb.width);
  for (int r = 0; r < rgb.height; ++r) {
    for (int c = 0; c < rgb.width; ++c) {
      if (!mask(r, c)) continue;
      double v[3];
      for (int k = 0; k < 3; ++k) v[k] = rgb.at(r, c, k) / 255.0 * 2.0 - 1.0;
      const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      for (int k = 0; k < 3; ++k) {
        n.map.at(r, c, k) = len > 0.0 ? static_cast<float>(v[k] / len) : 0.0f;
      }
    }
  }
  return n;
}

ByteImage colorize_aolp(const AolpMap& aolp, const DolpMap* dolp, int channel) {
  const Image& a = aolp.map;
  if (channel < 0 || channel >= a.channels()) throw ParameterError("colorize: channel out of range");
  if (dolp) {
    if (dolp->map.height() != a.height() || dolp->map.width() != a.width() ||
        channel >= dolp->map.channels()) {
      throw StructuralError("colorize: DoLP map does not match AoLP map");
    }
  }
  ByteImage out(a.height(), a.width(), 3);
  for (int r = 0; r < a.height(); ++r) {
    for (int c = 0; c < a.width(); ++c) {
      const double hue = (a.at(r, c, channel) + std::numbers::pi / 2.0) / std::numbers::pi;
      const double value = dolp ? std::clamp(static_cast<double>(dolp->map.at(r, c, channel)), 0.0, 1.0) : 1.0;
      hsv_to_rgb(hue, value, &out.at(r, c, 0));
    }
  }
  return out;
}

ByteImage colorize_dolp(const DolpMap& dolp, int channel) {
  const Image& d = dolp.map;
  if (channel < 0 || channel >= d.channels()) throw ParameterError("colorize: channel out of range");
  ByteImage out(d.height(), d.width(), 1);
  for (int r = 0; r < d.height(); ++r) {
    for (int c = 0; c < d.width(); ++c) out.at(r, c) = to_byte(d.at(r, c, channel));
  }
  return out;
}

ByteImage colorize_normals(const NormalMap& n) {
  return encode_normal_image(n, ForegroundMask(n.height(), n.width(), true));
}

}  // namespace polarsfp::io
