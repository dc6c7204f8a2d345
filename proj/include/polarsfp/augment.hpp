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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsfp/image.hpp"
#include "polarsfp/random.hpp"

namespace polarsfp::augment {

/// PRE degrades the four polarizer images before Stokes/DoLP/AoLP are derived;
/// POST degrades the derived maps directly (the ablation variant).
enum class Mode { kPre, kPost };

struct AugmentConfig {
  std::vector<int> blur_kernels = {1, 3, 5, 7};
  double noise_sigma_min = 0.0;
  double noise_sigma_max = 0.02;
  int quant_bits = 12;
  bool enable_blur = true;
  bool enable_noise = true;
  bool enable_quant = true;
  Mode mode = Mode::kPre;
  std::uint64_t seed = 0;

  /// Throws ConfigError on any violated invariant.
  void validate() const;

  friend bool operator==(const AugmentConfig&, const AugmentConfig&) = default;
};

/// Blur sigma tied to kernel size so the truncated kernel spans +-3 sigma.
inline double blur_sigma_for_kernel(int kernel) noexcept { return kernel / 6.0; }

std::string_view to_string(Mode m) noexcept;
Mode parse_mode(std::string_view text);  // "pre" | "post", case-insensitive

/// Flat `key = value` text. Lines starting with '#' are comments. Unknown keys,
/// duplicate keys and unparsable values raise ConfigError.
AugmentConfig parse_augment_config(std::string_view text);
std::string format_augment_config(const AugmentConfig& cfg);
AugmentConfig load_augment_config(const std::filesystem::path& path);

/// Normalized, truncated Gaussian weights of odd length `kernel`.
std::vector<double> gaussian_kernel(int kernel, double sigma);

/// Separable Gaussian blur with reflect padding (edge sample not repeated).
/// kernel == 1 returns the input unchanged.
Image gaussian_blur(const Image& img, int kernel, double sigma);
QuadPolarImage gaussian_blur(const QuadPolarImage& q, int kernel, double sigma);

/// Adds N(0, sigma^2) independently to every sample. No clamping.
Image add_noise(const Image& img, double sigma, RandomStream& rng);
/// Planes are perturbed in the order I0, I45, I90, I135.
QuadPolarImage add_noise(const QuadPolarImage& q, double sigma, RandomStream& rng);

/// Clamp to [0, 1] then snap to the (2^bits - 1)-step grid, rounding half away from zero.
float quantize_value(float v, int bits) noexcept;
Image quantize(const Image& img, int bits);
QuadPolarImage quantize(const QuadPolarImage& q, int bits);

/// Stage parameters drawn for one scene.
struct Draws {
  int kernel = 1;
  double blur_sigma = 0.0;
  double noise_sigma = 0.0;
};

struct AugmentResult {
  Image rgb;  // s0
  DolpMap dolp;
  AolpMap aolp;
  Draws draws;
  /// Degraded four-angle images (PRE mode only).
  std::optional<QuadPolarImage> sensor;
};

/// Draws kernel and noise sigma. Always consumes both draws regardless of the
/// stage enables.
Draws draw_parameters(const AugmentConfig& cfg, const RandomStream& rng);

AugmentResult augment_pre(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng);
AugmentResult augment_post(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng);
/// Dispatches on cfg.mode.
AugmentResult run(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng);

inline constexpr std::array<float, 3> kImageNetMean = {0.485f, 0.456f, 0.406f};
inline constexpr std::array<float, 3> kImageNetStd = {0.229f, 0.224f, 0.225f};

struct NetworkInput {
  Image rgb;   // standardized, 3 channels
  Image dolp;  // [-1, 1]
  Image aolp;  // (-1, 1]
};

/// dolp -> 2 dolp - 1, aolp -> aolp / (pi/2), rgb -> (rgb - mean) / std per channel.
/// Single-channel rgb is replicated to three channels first.
NetworkInput make_network_input(const Image& rgb, const DolpMap& dolp, const AolpMap& aolp);

}  // namespace polarsfp::augment
