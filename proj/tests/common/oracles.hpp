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

// Reference formulas and helpers for tests. Everything here is written from
// the defining equations independently of the library code paths it checks.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "polarsfp/image.hpp"

namespace polarsfp::testing {

inline constexpr double kPi = std::numbers::pi;

struct Stokes3 {
  double s0, s1, s2;
};

struct Quad4 {
  double i0, i45, i90, i135;
};

/// Linear Stokes from four polarizer readings.
inline Stokes3 oracle_quad_to_stokes(const Quad4& q) {
  return {(q.i0 + q.i45 + q.i90 + q.i135) / 2.0, q.i0 - q.i90, q.i45 - q.i135};
}

/// Malus-law intensity behind an ideal polarizer at angle phi (radians).
inline double oracle_malus(const Stokes3& s, double phi) {
  return 0.5 * (s.s0 + s.s1 * std::cos(2 * phi) + s.s2 * std::sin(2 * phi));
}

inline double oracle_dolp(const Stokes3& s, double eps = 1e-6) {
  const double d = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2) / std::max(s.s0, eps);
  return std::clamp(d, 0.0, 1.0);
}

/// Half-angle via single-argument arctangent plus explicit quadrant repair,
/// folded into (-pi/2, pi/2].
inline double oracle_aolp(const Stokes3& s) {
  double a;
  if (s.s1 > 0) {
    a = 0.5 * std::atan(s.s2 / s.s1);
  } else if (s.s1 < 0) {
    a = 0.5 * (std::atan(s.s2 / s.s1) + (s.s2 >= 0 ? kPi : -kPi));
  } else if (s.s2 > 0) {
    a = kPi / 4;
  } else if (s.s2 < 0) {
    a = -kPi / 4;
  } else {
    return 0.0;
  }
  while (a > kPi / 2) a -= kPi;
  while (a <= -kPi / 2) a += kPi;
  return a;
}

/// Smallest distance between two orientations defined modulo pi.
inline double aolp_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

/// Physically valid random Stokes pixel: s0 in (0, 1], DoLP in [0, 1].
inline Stokes3 random_valid_stokes(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double s0 = 1e-3 + (1.0 - 1e-3) * u(gen);
  const double dolp = u(gen);
  const double angle = (u(gen) - 0.5) * kPi;
  return {s0, s0 * dolp * std::cos(2 * angle), s0 * dolp * std::sin(2 * angle)};
}

inline StokesImage random_stokes_image(int h, int w, int c, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  StokesImage s{Image(h, w, c), Image(h, w, c), Image(h, w, c)};
  for (std::size_t i = 0; i < s.s0.size(); ++i) {
    const Stokes3 v = random_valid_stokes(gen);
    s.s0.values()[i] = static_cast<float>(v.s0);
    s.s1.values()[i] = static_cast<float>(v.s1);
    s.s2.values()[i] = static_cast<float>(v.s2);
  }
  return s;
}

inline Image random_image(int h, int w, int c, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  Image img(h, w, c);
  for (float& v : img.values()) v = static_cast<float>(u(gen));
  return img;
}

/// Ranks with ties sharing their average rank (1-based).
inline std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = (i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
    i = j + 1;
  }
  return rank;
}

/// Spearman rank correlation (Pearson correlation of average ranks).
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

/// Random unit vector on the sphere.
inline std::array<double, 3> random_unit(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<double, 3> v{n(gen), n(gen), n(gen)};
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (double& x : v) x /= len;
  return v;
}

inline NormalMap random_normal_map(int h, int w, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  NormalMap n(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const auto v = random_unit(gen);
      for (int k = 0; k < 3; ++k) n.map.at(r, c, k) = static_cast<float>(v[k]);
    }
  }
  return n;
}

/// Image of random finite float bit patterns (any sign, exponent, subnormals),
/// shaped for a PFM: 1 or 3 channels, small random dimensions.
inline Image random_bits_image(std::mt19937_64& gen, int max_dim = 40) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  const int h = dim(gen), w = dim(gen), c = (gen() & 1) ? 3 : 1;
  Image img(h, w, c);
  for (float& v : img.values()) {
    float f;
    do {
      const auto bits = static_cast<std::uint32_t>(gen());
      std::memcpy(&f, &bits, sizeof f);
    } while (!std::isfinite(f));
    v = f;
  }
  return img;
}

/// Bitwise equality (distinguishes -0.0 from 0.0).
inline bool bit_equal(const Image& a, const Image& b) {
  return a.same_shape(b) && std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

}  // namespace polarsfp::testing
