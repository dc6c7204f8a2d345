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

#include "polarsfp/polar.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "polarsfp/error.hpp"

namespace polarsfp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 3> kLumaWeights = {0.2126, 0.7152, 0.0722};

template <typename Fn>
Image map_stokes(const StokesImage& s, Fn&& fn) {
  Image out(s.height(), s.width(), s.channels());
  const auto a = s.s0.values();
  const auto b = s.s1.values();
  const auto c = s.s2.values();
  auto o = out.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = fn(a[i], b[i], c[i]);
  return out;
}

}  // namespace

StokesImage quad_to_stokes(const QuadPolarImage& q) {
  q.check();
  StokesImage s{Image(q.height(), q.width(), q.channels()),
                Image(q.height(), q.width(), q.channels()),
                Image(q.height(), q.width(), q.channels())};
  const auto i0 = q.i0.values();
  const auto i45 = q.i45.values();
  const auto i90 = q.i90.values();
  const auto i135 = q.i135.values();
  auto s0 = s.s0.values();
  auto s1 = s.s1.values();
  auto s2 = s.s2.values();
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const double a = i0[i], b = i45[i], c = i90[i], d = i135[i];
    s0[i] = static_cast<float>(0.5 * (a + b + c + d));
    s1[i] = static_cast<float>(a - c);
    s2[i] = static_cast<float>(b - d);
  }
  return s;
}

QuadPolarImage stokes_to_quad(const StokesImage& s) {
  s.check();
  const int h = s.height(), w = s.width(), c = s.channels();
  QuadPolarImage q{Image(h, w, c), Image(h, w, c), Image(h, w, c), Image(h, w, c)};
  const auto s0 = s.s0.values();
  const auto s1 = s.s1.values();
  const auto s2 = s.s2.values();
  auto i0 = q.i0.values();
  auto i45 = q.i45.values();
  auto i90 = q.i90.values();
  auto i135 = q.i135.values();
  // cos/sin of 2phi are exactly 0 or +-1 at the four polarizer angles.
  // Sums are formed in double so each output is rounded once.
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const double a = s0[i], b = s1[i], c = s2[i];
    i0[i] = static_cast<float>(0.5 * (a + b));
    i90[i] = static_cast<float>(0.5 * (a - b));
    i45[i] = static_cast<float>(0.5 * (a + c));
    i135[i] = static_cast<float>(0.5 * (a - c));
  }
  return q;
}

float wrap_aolp(double angle) noexcept {
  double r = std::remainder(angle, kPi);  // [-pi/2, pi/2]
  if (r <= -kPi / 2.0) r += kPi;
  auto f = static_cast<float>(r);
  if (f <= -kHalfPiF) f = kHalfPiF;
  if (f > kHalfPiF) f = kHalfPiF;
  return f;
}

float dolp_value(float s0, float s1, float s2, float epsilon) noexcept {
  const double mag = std::hypot(static_cast<double>(s1), static_cast<double>(s2));
  const double denom = std::max(static_cast<double>(s0), static_cast<double>(epsilon));
  const double d = mag / denom;
  if (!(d > 0.0)) return 0.0f;
  return d >= 1.0 ? 1.0f : static_cast<float>(d);
}

float aolp_value(float s1, float s2) noexcept {
  if (s1 == 0.0f && s2 == 0.0f) return 0.0f;
  return wrap_aolp(0.5 * std::atan2(static_cast<double>(s2), static_cast<double>(s1)));
}

StokesImage luminance(const StokesImage& s) {
  s.check();
  if (s.channels() == 1) return s;
  if (s.channels() != 3) {
    throw StructuralError("luminance collapse needs 1 or 3 channels, got " +
                          std::to_string(s.channels()));
  }
  auto collapse = [&](const Image& in) {
    Image out(in.height(), in.width(), 1);
    for (int r = 0; r < in.height(); ++r) {
      for (int c = 0; c < in.width(); ++c) {
        double acc = 0.0;
        for (int ch = 0; ch < 3; ++ch) acc += kLumaWeights[ch] * in.at(r, c, ch);
        out.at(r, c) = static_cast<float>(acc);
      }
    }
    return out;
  };
  return StokesImage{collapse(s.s0), collapse(s.s1), collapse(s.s2)};
}

DolpMap stokes_to_dolp(const StokesImage& s, float epsilon, CueChannels mode) {
  if (!(epsilon > 0.0f)) throw ParameterError("DoLP epsilon must be positive");
  if (mode == CueChannels::kLuminance) return stokes_to_dolp(luminance(s), epsilon);
  s.check();
  return DolpMap{map_stokes(
      s, [epsilon](float a, float b, float c) { return dolp_value(a, b, c, epsilon); })};
}

AolpMap stokes_to_aolp(const StokesImage& s, CueChannels mode) {
  if (mode == CueChannels::kLuminance) return stokes_to_aolp(luminance(s));
  s.check();
  return AolpMap{map_stokes(s, [](float, float b, float c) { return aolp_value(b, c); })};
}

StokesValidity validate_stokes(const StokesImage& s) {
  s.check();
  StokesValidity v;
  const auto s0 = s.s0.values();
  const auto s1 = s.s1.values();
  const auto s2 = s.s2.values();
  v.samples = s0.size();
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const double intensity = s0[i];
    const double mag = std::hypot(static_cast<double>(s1[i]), static_cast<double>(s2[i]));
    const bool negative = intensity < 0.0;
    const bool over = mag > intensity * (1.0 + 1e-6);
    v.negative_s0 += negative;
    v.over_polarized += over;
    v.invalid += (negative || over);
  }
  return v;
}

}  // namespace polarsfp
