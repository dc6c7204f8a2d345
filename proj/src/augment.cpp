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

#include "polarsfp/augment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "polarsfp/error.hpp"
#include "polarsfp/keyvalue.hpp"
#include "polarsfp/polar.hpp"

namespace polarsfp::augment {

namespace {

// Reflect about the edge samples without repeating them: [c b | a b c | b a].
int reflect_index(int i, int n) noexcept {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

}  // namespace

void AugmentConfig::validate() const {
  if (blur_kernels.empty()) throw ConfigError("blur_kernels must not be empty");
  for (int k : blur_kernels) {
    if (k < 1 || k % 2 == 0) {
      throw ConfigError("blur kernel sizes must be odd and >= 1, got " + std::to_string(k));
    }
  }
  if (!(noise_sigma_min >= 0.0)) throw ConfigError("noise_sigma_min must be >= 0");
  if (!(noise_sigma_max >= noise_sigma_min)) {
    throw ConfigError("noise_sigma_max must be >= noise_sigma_min");
  }
  if (quant_bits < 1 || quant_bits > 16) throw ConfigError("quant_bits must be in [1, 16]");
}

std::string_view to_string(Mode m) noexcept { return m == Mode::kPre ? "pre" : "post"; }

Mode parse_mode(std::string_view text) {
  const std::string v = kv::lower(kv::trim(text));
  if (v == "pre") return Mode::kPre;
  if (v == "post") return Mode::kPost;
  throw ConfigError("mode must be 'pre' or 'post', got '" + std::string(text) + "'");
}

AugmentConfig parse_augment_config(std::string_view text) {
  AugmentConfig cfg;
  for (const auto& [key, value] : kv::parse(text)) {
    if (key == "blur_kernels") {
      cfg.blur_kernels = kv::to_int_list(key, value);
    } else if (key == "noise_sigma_min") {
      cfg.noise_sigma_min = kv::to_double(key, value);
    } else if (key == "noise_sigma_max") {
      cfg.noise_sigma_max = kv::to_double(key, value);
    } else if (key == "quant_bits") {
      cfg.quant_bits = kv::to_int(key, value);
    } else if (key == "mode") {
      cfg.mode = parse_mode(value);
    } else if (key == "seed") {
      cfg.seed = kv::to_u64(key, value);
    } else if (key == "enable_blur") {
      cfg.enable_blur = kv::to_bool(key, value);
    } else if (key == "enable_noise") {
      cfg.enable_noise = kv::to_bool(key, value);
    } else if (key == "enable_quant") {
      cfg.enable_quant = kv::to_bool(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

std::string format_augment_config(const AugmentConfig& cfg) {
  std::ostringstream out;
  out << "blur_kernels = ";
  for (std::size_t i = 0; i < cfg.blur_kernels.size(); ++i) {
    out << (i ? "," : "") << cfg.blur_kernels[i];
  }
  out << "\nnoise_sigma_min = " << kv::format_double(cfg.noise_sigma_min)
      << "\nnoise_sigma_max = " << kv::format_double(cfg.noise_sigma_max)
      << "\nquant_bits = " << cfg.quant_bits
      << "\nmode = " << to_string(cfg.mode)
      << "\nseed = " << cfg.seed
      << "\nenable_blur = " << (cfg.enable_blur ? "true" : "false")
      << "\nenable_noise = " << (cfg.enable_noise ? "true" : "false")
      << "\nenable_quant = " << (cfg.enable_quant ? "true" : "false") << "\n";
  return out.str();
}

AugmentConfig load_augment_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_augment_config(buf.str());
}

std::vector<double> gaussian_kernel(int kernel, double sigma) {
  if (kernel < 1 || kernel % 2 == 0) {
    throw ParameterError("blur kernel size must be odd and >= 1, got " + std::to_string(kernel));
  }
  if (kernel == 1) return {1.0};
  if (!(sigma > 0.0)) throw ParameterError("blur sigma must be positive for kernel > 1");
  const int radius = kernel / 2;
  std::vector<double> w(kernel);
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    w[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    total += w[i + radius];
  }
  for (double& x : w) x /= total;
  return w;
}

Image gaussian_blur(const Image& img, int kernel, double sigma) {
  const auto w = gaussian_kernel(kernel, sigma);
  if (kernel == 1) return img;
  const int radius = kernel / 2;
  const int h = img.height(), wd = img.width(), ch = img.channels();

  Image tmp(h, wd, ch);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < wd; ++c) {
      for (int k = 0; k < ch; ++k) {
        double acc = 0.0;
        for (int t = -radius; t <= radius; ++t) {
          acc += w[t + radius] * img.at(r, reflect_index(c + t, wd), k);
        }
        tmp.at(r, c, k) = static_cast<float>(acc);
      }
    }
  }
  Image out(h, wd, ch);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < wd; ++c) {
      for (int k = 0; k < ch; ++k) {
        double acc = 0.0;
        for (int t = -radius; t <= radius; ++t) {
          acc += w[t + radius] * tmp.at(reflect_index(r + t, h), c, k);
        }
        out.at(r, c, k) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

QuadPolarImage gaussian_blur(const QuadPolarImage& q, int kernel, double sigma) {
  q.check();
  return QuadPolarImage{gaussian_blur(q.i0, kernel, sigma), gaussian_blur(q.i45, kernel, sigma),
                        gaussian_blur(q.i90, kernel, sigma), gaussian_blur(q.i135, kernel, sigma)};
}

Image add_noise(const Image& img, double sigma, RandomStream& rng) {
  if (!(sigma >= 0.0)) throw ParameterError("noise sigma must be >= 0");
  if (sigma == 0.0) return img;
  Image out = img;
  for (float& v : out.values()) v = static_cast<float>(v + sigma * rng.normal());
  return out;
}

QuadPolarImage add_noise(const QuadPolarImage& q, double sigma, RandomStream& rng) {
  q.check();
  QuadPolarImage out;
  out.i0 = add_noise(q.i0, sigma, rng);
  out.i45 = add_noise(q.i45, sigma, rng);
  out.i90 = add_noise(q.i90, sigma, rng);
  out.i135 = add_noise(q.i135, sigma, rng);
  return out;
}

float quantize_value(float v, int bits) noexcept {
  const double levels = static_cast<double>((1u << bits) - 1u);
  const double clamped = std::clamp(static_cast<double>(v), 0.0, 1.0);
  // std::round rounds halfway cases away from zero.
  return static_cast<float>(std::round(clamped * levels) / levels);
}

Image quantize(const Image& img, int bits) {
  if (bits < 1 || bits > 16) throw ParameterError("quantization bits must be in [1, 16]");
  Image out = img;
  for (float& v : out.values()) v = quantize_value(v, bits);
  return out;
}

QuadPolarImage quantize(const QuadPolarImage& q, int bits) {
  q.check();
  return QuadPolarImage{quantize(q.i0, bits), quantize(q.i45, bits), quantize(q.i90, bits),
                        quantize(q.i135, bits)};
}

Draws draw_parameters(const AugmentConfig& cfg, const RandomStream& rng) {
  cfg.validate();
  Draws d;
  auto blur_rng = rng.fork("blur");
  const auto idx = blur_rng.uniform_int(0, static_cast<std::int64_t>(cfg.blur_kernels.size()) - 1);
  d.kernel = cfg.blur_kernels[static_cast<std::size_t>(idx)];
  d.blur_sigma = blur_sigma_for_kernel(d.kernel);
  auto level_rng = rng.fork("noise-level");
  d.noise_sigma = level_rng.uniform(cfg.noise_sigma_min, cfg.noise_sigma_max);
  return d;
}

AugmentResult augment_pre(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng) {
  if (cfg.mode != Mode::kPre) throw ParameterError("augment_pre requires mode = pre");
  s.check();
  AugmentResult result;
  result.draws = draw_parameters(cfg, rng);
  auto noise_rng = rng.fork("noise");

  const bool blur = cfg.enable_blur && result.draws.kernel > 1;
  const bool noise = cfg.enable_noise && result.draws.noise_sigma > 0.0;
  QuadPolarImage q = stokes_to_quad(s);
  if (blur) q = gaussian_blur(q, result.draws.kernel, result.draws.blur_sigma);
  if (noise) q = add_noise(q, result.draws.noise_sigma, noise_rng);
  if (cfg.enable_quant) q = quantize(q, cfg.quant_bits);

  // The Stokes -> quad -> Stokes round trip is exact in real arithmetic but
  // costs ~1e-7 in float storage, which low-DoLP AoLP amplifies. When no
  // sensor-domain stage changed anything, derive the cues from the input.
  const bool degraded_any = blur || noise || cfg.enable_quant;
  const StokesImage degraded = degraded_any ? quad_to_stokes(q) : s;
  result.rgb = degraded.s0;
  result.dolp = stokes_to_dolp(degraded);
  result.aolp = stokes_to_aolp(degraded);
  result.sensor = std::move(q);
  return result;
}

AugmentResult augment_post(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng) {
  if (cfg.mode != Mode::kPost) throw ParameterError("augment_post requires mode = post");
  s.check();
  AugmentResult result;
  result.draws = draw_parameters(cfg, rng);
  auto noise_rng = rng.fork("noise");

  Image rgb = s.s0;
  Image dolp = stokes_to_dolp(s).map;
  Image aolp = stokes_to_aolp(s).map;

  if (cfg.enable_blur) {
    const auto& d = result.draws;
    rgb = gaussian_blur(rgb, d.kernel, d.blur_sigma);
    dolp = gaussian_blur(dolp, d.kernel, d.blur_sigma);
    aolp = gaussian_blur(aolp, d.kernel, d.blur_sigma);
  }
  if (cfg.enable_noise) {
    const double sigma = result.draws.noise_sigma;
    rgb = add_noise(rgb, sigma, noise_rng);
    dolp = add_noise(dolp, sigma, noise_rng);
    aolp = add_noise(aolp, sigma, noise_rng);
  }
  for (float& v : dolp.values()) v = std::clamp(v, 0.0f, 1.0f);
  for (float& v : aolp.values()) v = wrap_aolp(v);
  if (cfg.enable_quant) rgb = quantize(rgb, cfg.quant_bits);

  result.rgb = std::move(rgb);
  result.dolp = DolpMap{std::move(dolp)};
  result.aolp = AolpMap{std::move(aolp)};
  return result;
}

AugmentResult run(const StokesImage& s, const AugmentConfig& cfg, const RandomStream& rng) {
  return cfg.mode == Mode::kPre ? augment_pre(s, cfg, rng) : augment_post(s, cfg, rng);
}

NetworkInput make_network_input(const Image& rgb, const DolpMap& dolp, const AolpMap& aolp) {
  require_same_shape(dolp.map, aolp.map, "network input AoLP");
  if (rgb.height() != dolp.map.height() || rgb.width() != dolp.map.width()) {
    throw StructuralError("network input: rgb " + rgb.shape_string() + " vs DoLP " +
                          dolp.map.shape_string());
  }
  if (rgb.channels() != 1 && rgb.channels() != 3) {
    throw StructuralError("network input rgb needs 1 or 3 channels");
  }
  NetworkInput out{Image(rgb.height(), rgb.width(), 3), dolp.map, aolp.map};
  for (int r = 0; r < rgb.height(); ++r) {
    for (int c = 0; c < rgb.width(); ++c) {
      for (int k = 0; k < 3; ++k) {
        const float v = rgb.at(r, c, rgb.channels() == 3 ? k : 0);
        out.rgb.at(r, c, k) = (v - kImageNetMean[k]) / kImageNetStd[k];
      }
    }
  }
  constexpr float kInvHalfPi = static_cast<float>(2.0 / std::numbers::pi);
  for (float& v : out.dolp.values()) v = 2.0f * v - 1.0f;
  for (float& v : out.aolp.values()) v = std::clamp(v * kInvHalfPi, -1.0f, 1.0f);
  return out;
}

}  // namespace polarsfp::augment
