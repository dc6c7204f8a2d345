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
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "polarsfp/augment.hpp"
#include "polarsfp/error.hpp"
#include "polarsfp/polar.hpp"

namespace polarsfp::augment {
namespace {

using polarsfp::testing::kPi;

AugmentConfig all_disabled(Mode mode = Mode::kPre) {
  AugmentConfig cfg;
  cfg.enable_blur = cfg.enable_noise = cfg.enable_quant = false;
  cfg.mode = mode;
  return cfg;
}

// Full 2-D kernel built directly from the Gaussian, normalized over the square.
std::vector<std::vector<double>> oracle_kernel_2d(int k, double sigma) {
  const int r = k / 2;
  std::vector<std::vector<double>> w(k, std::vector<double>(k));
  double total = 0;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      w[i + r][j + r] = std::exp(-(i * i + j * j) / (2 * sigma * sigma));
      total += w[i + r][j + r];
    }
  }
  for (auto& row : w) for (double& x : row) x /= total;
  return w;
}

TEST(GaussianKernel, NormalizedSymmetricAndValidated) {
  for (int k : {1, 3, 5, 7, 9}) {
    const auto w = gaussian_kernel(k, blur_sigma_for_kernel(k));
    ASSERT_EQ(static_cast<int>(w.size()), k);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    for (int i = 0; i < k; ++i) EXPECT_DOUBLE_EQ(w[i], w[k - 1 - i]);
  }
  EXPECT_THROW(gaussian_kernel(4, 1.0), ParameterError);
  EXPECT_THROW(gaussian_kernel(0, 1.0), ParameterError);
  EXPECT_THROW(gaussian_kernel(3, 0.0), ParameterError);
}

TEST(GaussianBlur, KernelOneIsBitExactIdentity) {
  const Image img = polarsfp::testing::random_image(9, 11, 3, 1);
  EXPECT_EQ(gaussian_blur(img, 1, 0.0), img);
}

TEST(GaussianBlur, EvenKernelRejected) {
  EXPECT_THROW(gaussian_blur(Image(4, 4, 1), 2, 1.0), ParameterError);
}

TEST(GaussianBlur, ConstantPreserved) {
  const Image img(10, 13, 3, 0.37f);
  for (int k : {3, 5, 7}) {
    const Image out = gaussian_blur(img, k, blur_sigma_for_kernel(k));
    for (float v : out.values()) EXPECT_NEAR(v, 0.37f, 1e-6);
  }
}

TEST(GaussianBlur, ImpulseResponseMatchesKernel) {
  Image img(9, 9, 1);
  img.at(4, 4) = 1.0f;
  const double sigma = blur_sigma_for_kernel(3);
  const Image out = gaussian_blur(img, 3, sigma);
  const auto w2 = oracle_kernel_2d(3, sigma);
  double total = 0;
  for (float v : out.values()) total += v;
  EXPECT_NEAR(total, 1.0, 1e-6);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) EXPECT_NEAR(out.at(4 + i, 4 + j), w2[i + 1][j + 1], 1e-6);
  }
  EXPECT_FLOAT_EQ(out.at(0, 0), 0.0f);
}

TEST(GaussianBlur, ReflectBorderDoesNotRepeatEdge) {
  Image ramp(1, 5, 1);
  for (int c = 0; c < 5; ++c) ramp.at(0, c) = static_cast<float>(c);
  const double sigma = 1.0;
  const auto w = gaussian_kernel(3, sigma);
  const Image out = gaussian_blur(ramp, 3, sigma);
  // Left neighbour of column 0 is column 1.
  EXPECT_NEAR(out.at(0, 0), w[0] * 1 + w[1] * 0 + w[2] * 1, 1e-6);
  EXPECT_NEAR(out.at(0, 4), w[0] * 3 + w[1] * 4 + w[2] * 3, 1e-6);
}

TEST(GaussianBlur, AppliedIdenticallyToAllFourPlanes) {
  const Image plane = polarsfp::testing::random_image(8, 8, 1, 4);
  const QuadPolarImage q{plane, plane, plane, plane};
  const auto out = gaussian_blur(q, 5, blur_sigma_for_kernel(5));
  EXPECT_EQ(out.i0, out.i45);
  EXPECT_EQ(out.i0, out.i90);
  EXPECT_EQ(out.i0, out.i135);
}

TEST(AddNoise, ZeroSigmaIsIdentity) {
  const Image img = polarsfp::testing::random_image(6, 6, 1, 3);
  RandomStream rng(1, "scene", "noise");
  EXPECT_EQ(add_noise(img, 0.0, rng), img);
  EXPECT_THROW(add_noise(img, -0.1, rng), ParameterError);
}

TEST(AddNoise, StatisticsOverFullFrame) {
  const Image img(512, 612, 1, 0.5f);
  RandomStream rng(42, "scene_00000", "noise");
  const Image out = add_noise(img, 0.02, rng);
  const double n = static_cast<double>(img.size());
  double sum = 0, sq = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double d = static_cast<double>(out.values()[i]) - img.values()[i];
    sum += d;
    sq += d * d;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sq / n - mean * mean);
  EXPECT_LT(std::abs(mean), 3 * 0.02 / std::sqrt(n));
  EXPECT_LT(std::abs(sd - 0.02), 0.02 * 0.02);
}

TEST(AddNoise, DeterministicPerSceneAndDistinctAcrossScenes) {
  const Image img(16, 16, 3, 0.5f);
  RandomStream a(7, "scene_a", "noise"), b(7, "scene_a", "noise"), c(7, "scene_b", "noise");
  const Image x = add_noise(img, 0.02, a);
  EXPECT_EQ(x, add_noise(img, 0.02, b));
  EXPECT_NE(x, add_noise(img, 0.02, c));
}

TEST(Quantize, HalfwayRoundsAwayFromZero) {
  EXPECT_FLOAT_EQ(quantize_value(0.5f, 12), static_cast<float>(2048.0 / 4095.0));
  EXPECT_NEAR(quantize_value(0.5f, 12), 0.5001221, 1e-7);
  EXPECT_EQ(quantize_value(-0.3f, 12), 0.0f);
  EXPECT_EQ(quantize_value(1.7f, 12), 1.0f);
  EXPECT_EQ(quantize_value(0.5f, 1), 1.0f);
}

TEST(Quantize, IdempotentAndOnGrid) {
  const Image img = polarsfp::testing::random_image(20, 20, 3, 8, -0.2, 1.2);
  const Image q = quantize(img, 12);
  EXPECT_EQ(quantize(q, 12), q);
  for (float v : q.values()) {
    const double code = v * 4095.0;
    EXPECT_NEAR(code, std::round(code), 1e-3);
  }
  EXPECT_THROW(quantize(img, 0), ParameterError);
  EXPECT_THROW(quantize(img, 17), ParameterError);
}

TEST(Draws, StayInsideConfiguredSets) {
  AugmentConfig cfg;
  std::set<int> kernels;
  for (int i = 0; i < 200; ++i) {
    const auto d = draw_parameters(cfg, RandomStream(5, "scene_" + std::to_string(i), "augment"));
    kernels.insert(d.kernel);
    EXPECT_GE(d.noise_sigma, 0.0);
    EXPECT_LE(d.noise_sigma, 0.02);
    EXPECT_DOUBLE_EQ(d.blur_sigma, d.kernel / 6.0);
  }
  EXPECT_EQ(kernels, (std::set<int>{1, 3, 5, 7}));
}

TEST(AugmentPre, AllStagesDisabledReproducesCleanCues) {
  const auto s = polarsfp::testing::random_stokes_image(16, 20, 3, 2);
  const auto res = augment_pre(s, all_disabled(), RandomStream(1, "x", "augment"));
  const auto dolp = stokes_to_dolp(s).map;
  const auto aolp = stokes_to_aolp(s).map;
  for (std::size_t i = 0; i < dolp.size(); ++i) {
    EXPECT_NEAR(res.dolp.map.values()[i], dolp.values()[i], 1e-6);
    EXPECT_LT(polarsfp::testing::aolp_distance(res.aolp.map.values()[i], aolp.values()[i]), 1e-6);
    EXPECT_NEAR(res.rgb.values()[i], s.s0.values()[i], 1e-6);
  }
}

TEST(AugmentPre, QuantizationKeepsFullPolarizationNearOne) {
  StokesImage s{Image(8, 8, 1), Image(8, 8, 1), Image(8, 8, 1)};
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < s.s0.size(); ++i) {
    const double s0 = 0.2 + 0.8 * u(gen), a = (u(gen) - 0.5) * kPi;
    s.s0.values()[i] = float(s0);
    s.s1.values()[i] = float(s0 * std::cos(2 * a));
    s.s2.values()[i] = float(s0 * std::sin(2 * a));
  }
  AugmentConfig cfg;
  cfg.blur_kernels = {1};
  cfg.noise_sigma_min = cfg.noise_sigma_max = 0.0;
  const auto res = augment_pre(s, cfg, RandomStream(1, "q", "augment"));
  for (float d : res.dolp.map.values()) EXPECT_NEAR(d, 1.0, 4.0 / 4095.0);
}

TEST(AugmentPre, BlurCommutesWithStokesMaps) {
  const auto s = polarsfp::testing::random_stokes_image(12, 15, 3, 6);
  for (int k : {3, 5, 7}) {
    const double sigma = blur_sigma_for_kernel(k);
    const auto via_quad = quad_to_stokes(gaussian_blur(stokes_to_quad(s), k, sigma));
    const Image b0 = gaussian_blur(s.s0, k, sigma), b1 = gaussian_blur(s.s1, k, sigma),
                b2 = gaussian_blur(s.s2, k, sigma);
    for (std::size_t i = 0; i < b0.size(); ++i) {
      EXPECT_NEAR(via_quad.s0.values()[i], b0.values()[i], 1e-5);
      EXPECT_NEAR(via_quad.s1.values()[i], b1.values()[i], 1e-5);
      EXPECT_NEAR(via_quad.s2.values()[i], b2.values()[i], 1e-5);
    }
  }
}

TEST(AugmentPre, FullPipelineKeepsShapeAndRanges) {
  const auto s = polarsfp::testing::random_stokes_image(24, 30, 3, 10);
  AugmentConfig cfg;
  cfg.noise_sigma_min = cfg.noise_sigma_max = 0.02;
  const auto res = augment_pre(s, cfg, RandomStream(3, "r", "augment"));
  EXPECT_TRUE(res.rgb.same_shape(s.s0));
  EXPECT_TRUE(res.dolp.map.same_shape(s.s0));
  EXPECT_TRUE(res.aolp.map.same_shape(s.s0));
  ASSERT_TRUE(res.sensor.has_value());
  EXPECT_TRUE(res.sensor->i0.same_shape(s.s0));
  for (float v : res.dolp.map.values()) {
    EXPECT_GE(v, 0.0f);
    EXPECT_LE(v, 1.0f);
  }
  for (float v : res.aolp.map.values()) {
    EXPECT_GT(v, -kHalfPiF);
    EXPECT_LE(v, kHalfPiF);
  }
  // Noise pushes some pixels outside the physical cone; that is reported, not fixed.
  const auto degraded = quad_to_stokes(*res.sensor);
  EXPECT_GT(validate_stokes(degraded).over_polarized_fraction(), 0.0);
}

TEST(AugmentPre, DeterministicAndOrderIndependent) {
  const auto a = polarsfp::testing::random_stokes_image(10, 10, 1, 1);
  const auto b = polarsfp::testing::random_stokes_image(10, 10, 1, 2);
  AugmentConfig cfg;
  cfg.seed = 99;
  const auto ra1 = augment_pre(a, cfg, RandomStream(cfg.seed, "A", "augment"));
  const auto rb1 = augment_pre(b, cfg, RandomStream(cfg.seed, "B", "augment"));
  const auto rb2 = augment_pre(b, cfg, RandomStream(cfg.seed, "B", "augment"));
  const auto ra2 = augment_pre(a, cfg, RandomStream(cfg.seed, "A", "augment"));
  EXPECT_EQ(ra1.rgb, ra2.rgb);
  EXPECT_EQ(ra1.aolp.map, ra2.aolp.map);
  EXPECT_EQ(rb1.dolp.map, rb2.dolp.map);
}

TEST(AugmentPre, ModeMismatchRejected) {
  const auto s = polarsfp::testing::random_stokes_image(2, 2, 1, 1);
  EXPECT_THROW(augment_pre(s, all_disabled(Mode::kPost), RandomStream(1, "x")), ParameterError);
  EXPECT_THROW(augment_post(s, all_disabled(Mode::kPre), RandomStream(1, "x")), ParameterError);
}

TEST(AugmentPost, AllDisabledMatchesPre) {
  const auto s = polarsfp::testing::random_stokes_image(9, 9, 3, 4);
  const auto pre = augment_pre(s, all_disabled(Mode::kPre), RandomStream(1, "x", "augment"));
  const auto post = augment_post(s, all_disabled(Mode::kPost), RandomStream(1, "x", "augment"));
  for (std::size_t i = 0; i < pre.rgb.size(); ++i) {
    EXPECT_NEAR(pre.dolp.map.values()[i], post.dolp.map.values()[i], 1e-6);
    EXPECT_LT(polarsfp::testing::aolp_distance(pre.aolp.map.values()[i], post.aolp.map.values()[i]), 1e-6);
    EXPECT_NEAR(pre.rgb.values()[i], post.rgb.values()[i], 1e-6);
  }
  EXPECT_FALSE(post.sensor.has_value());
}

TEST(AugmentPost, DiffersFromPreUnderNoise) {
  const auto s = polarsfp::testing::random_stokes_image(9, 9, 1, 4);
  AugmentConfig cfg;
  cfg.noise_sigma_min = cfg.noise_sigma_max = 0.02;
  const auto pre = augment_pre(s, cfg, RandomStream(1, "x", "augment"));
  cfg.mode = Mode::kPost;
  const auto post = augment_post(s, cfg, RandomStream(1, "x", "augment"));
  EXPECT_NE(pre.aolp.map, post.aolp.map);
  for (float v : post.dolp.map.values()) {
    EXPECT_GE(v, 0.0f);
    EXPECT_LE(v, 1.0f);
  }
  for (float v : post.aolp.map.values()) {
    EXPECT_GT(v, -kHalfPiF);
    EXPECT_LE(v, kHalfPiF);
  }
}

TEST(Config, RoundTripAndValidation) {
  AugmentConfig cfg;
  cfg.blur_kernels = {1, 5};
  cfg.noise_sigma_min = 0.001;
  cfg.noise_sigma_max = 0.0123456789;
  cfg.quant_bits = 10;
  cfg.mode = Mode::kPost;
  cfg.seed = 18446744073709551615ull;
  cfg.enable_blur = false;
  EXPECT_EQ(parse_augment_config(format_augment_config(cfg)), cfg);

  EXPECT_EQ(parse_augment_config("# defaults only\n\n"), AugmentConfig{});
  EXPECT_THROW(parse_augment_config("blur_size = 3"), ConfigError);
  EXPECT_THROW(parse_augment_config("blur_kernels = 1,4"), ConfigError);
  EXPECT_THROW(parse_augment_config("quant_bits = 17"), ConfigError);
  EXPECT_THROW(parse_augment_config("noise_sigma_min = -0.1"), ConfigError);
  EXPECT_THROW(parse_augment_config("mode = sideways"), ConfigError);
  EXPECT_THROW(parse_augment_config("seed = 1\nseed = 2"), ConfigError);
  EXPECT_THROW(parse_augment_config("enable_blur = maybe"), ConfigError);
  EXPECT_THROW(parse_augment_config("noise_sigma_max"), ConfigError);
}

TEST(NetworkInput, Mappings) {
  Image rgb(1, 3, 3);
  for (int k = 0; k < 3; ++k) rgb.at(0, 0, k) = kImageNetMean[k];
  Image dolp(1, 3, 1), aolp(1, 3, 1);
  dolp.at(0, 0) = 0.0f;
  dolp.at(0, 1) = 1.0f;
  dolp.at(0, 2) = 0.25f;
  aolp.at(0, 0) = static_cast<float>(kPi / 4);
  aolp.at(0, 1) = kHalfPiF;
  aolp.at(0, 2) = -static_cast<float>(kPi / 4);
  const auto in = make_network_input(rgb, DolpMap{dolp}, AolpMap{aolp});
  EXPECT_FLOAT_EQ(in.dolp.at(0, 0), -1.0f);
  EXPECT_FLOAT_EQ(in.dolp.at(0, 1), 1.0f);
  EXPECT_FLOAT_EQ(in.dolp.at(0, 2), -0.5f);
  EXPECT_NEAR(in.aolp.at(0, 0), 0.5, 1e-6);
  EXPECT_FLOAT_EQ(in.aolp.at(0, 1), 1.0f);
  EXPECT_NEAR(in.aolp.at(0, 2), -0.5, 1e-6);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(in.rgb.at(0, 0, k), 0.0, 1e-6);
  EXPECT_NEAR(in.rgb.at(0, 1, 0), -0.485 / 0.229, 1e-5);

  const auto gray = make_network_input(Image(1, 3, 1, 0.5f), DolpMap{dolp}, AolpMap{aolp});
  EXPECT_EQ(gray.rgb.channels(), 3);
  EXPECT_NEAR(gray.rgb.at(0, 0, 2), (0.5 - 0.406) / 0.225, 1e-5);
  EXPECT_THROW(make_network_input(Image(2, 3, 3), DolpMap{dolp}, AolpMap{aolp}), StructuralError);
}

}  // namespace
}  // namespace polarsfp::augment
