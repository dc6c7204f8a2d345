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
#include <limits>
#include <numbers>

#include "polarsfp/error.hpp"
#include "polarsfp/keyvalue.hpp"
#include "polarsfp/polar.hpp"
#include "polarsfp/scenegen.hpp"

namespace polarsfp::scene {

namespace {

using Vec3 = std::array<double, 3>;

constexpr double kGroundAlbedo = 0.5;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 normalized(const Vec3& a) { return scale(a, 1.0 / std::sqrt(dot(a, a))); }

// Nearest positive ray parameter for a sphere, or +inf.
double hit_sphere(const Vec3& origin, const Vec3& dir, const Sphere& s) {
  const Vec3 oc = sub(origin, s.center);
  const double b = dot(oc, dir);
  const double c = dot(oc, oc) - s.radius * s.radius;
  const double disc = b * b - c;
  if (disc < 0.0) return std::numeric_limits<double>::infinity();
  const double root = std::sqrt(disc);
  double t = -b - root;
  if (t <= 1e-9) t = -b + root;
  return t > 1e-9 ? t : std::numeric_limits<double>::infinity();
}

}  // namespace

void ToyScene::validate() const {
  for (const auto& s : spheres) {
    if (!(s.radius > 0.0)) throw ParameterError("toy scene: sphere radius must be positive");
  }
  if (std::abs(std::sqrt(dot(light, light)) - 1.0) > 1e-6) {
    throw ParameterError("toy scene: light direction must be a unit vector");
  }
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ParameterError("toy scene: kappa must be in [0, 1]");
  if (channels != 1 && channels != 3) throw ParameterError("toy scene: channels must be 1 or 3");
}

double toy_dolp(const Vec3& n, const Vec3& v, double kappa) {
  const double c = std::clamp(dot(n, v), -1.0, 1.0);
  return kappa * (1.0 - c * c);  // kappa sin^2(theta)
}

double toy_aolp(const Vec3& n) { return wrap_aolp(std::atan2(n[1], n[0])); }

ToyRender toy_render(const ToyScene& scene, Resolution res, const ToyCamera& camera) {
  scene.validate();
  if (res.height < 1 || res.width < 1) throw ParameterError("toy render: empty resolution");
  const int h = res.height, w = res.width, ch = scene.channels;
  ToyRender out{StokesImage{Image(h, w, ch), Image(h, w, ch), Image(h, w, ch)}, NormalMap(h, w),
                ForegroundMask(h, w)};

  const double pixel = camera.view_height / h;
  const double focal = (h / 2.0) / std::tan(camera.fov_deg * std::numbers::pi / 360.0);

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double u = c + 0.5 - w / 2.0;
      const double v = h / 2.0 - r - 0.5;
      Vec3 origin, dir;
      if (camera.projection == Projection::kOrthographic) {
        origin = {u * pixel, v * pixel, camera.distance};
        dir = {0.0, 0.0, -1.0};
      } else {
        origin = {0.0, 0.0, camera.distance};
        dir = normalized({u / focal, v / focal, -1.0});
      }

      double best = std::numeric_limits<double>::infinity();
      const Sphere* hit = nullptr;
      for (const auto& s : scene.spheres) {
        const double t = hit_sphere(origin, dir, s);
        if (t < best) {
          best = t;
          hit = &s;
        }
      }
      Vec3 n;
      Vec3 albedo{kGroundAlbedo, kGroundAlbedo, kGroundAlbedo};
      if (hit) {
        n = normalized(sub(add(origin, scale(dir, best)), hit->center));
        albedo = hit->albedo;
        out.mask.set(r, c, true);
        for (int k = 0; k < 3; ++k) out.normals.map.at(r, c, k) = static_cast<float>(n[k]);
      } else if (scene.ground && dir[2] < 0.0) {
        n = {0.0, 0.0, 1.0};
      } else {
        continue;  // empty background: zero Stokes
      }

      const Vec3 view = scale(dir, -1.0);
      const double shading = std::max(dot(n, scene.light), kMinShading);
      const double dolp = toy_dolp(n, view, scene.kappa);
      const double aolp = toy_aolp(n);
      const double c2 = std::cos(2.0 * aolp), s2 = std::sin(2.0 * aolp);
      for (int k = 0; k < ch; ++k) {
        const double s0 = albedo[k] * shading;
        out.stokes.s0.at(r, c, k) = static_cast<float>(s0);
        out.stokes.s1.at(r, c, k) = static_cast<float>(s0 * dolp * c2);
        out.stokes.s2.at(r, c, k) = static_cast<float>(s0 * dolp * s2);
      }
    }
  }
  return out;
}

void ToySetConfig::validate() const {
  if (height < 1 || width < 1) throw ConfigError("toyset resolution must be positive");
  if (channels != 1 && channels != 3) throw ConfigError("toyset channels must be 1 or 3");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw ConfigError("toyset kappa must be in [0, 1]");
  if (min_spheres < 1 || max_spheres < min_spheres) throw ConfigError("invalid sphere count range");
  if (!(val_fraction >= 0.0) || !(test_fraction >= 0.0) || val_fraction + test_fraction > 1.0) {
    throw ConfigError("val_fraction + test_fraction must lie in [0, 1]");
  }
}

ToySetConfig parse_toyset_config(std::string_view text) {
  ToySetConfig cfg;
  for (const auto& [key, value] : kv::parse(text)) {
    if (key == "height") cfg.height = kv::to_int(key, value);
    else if (key == "width") cfg.width = kv::to_int(key, value);
    else if (key == "channels") cfg.channels = kv::to_int(key, value);
    else if (key == "kappa") cfg.kappa = kv::to_double(key, value);
    else if (key == "min_spheres") cfg.min_spheres = kv::to_int(key, value);
    else if (key == "max_spheres") cfg.max_spheres = kv::to_int(key, value);
    else if (key == "ground") cfg.ground = kv::to_bool(key, value);
    else if (key == "val_fraction") cfg.val_fraction = kv::to_double(key, value);
    else if (key == "test_fraction") cfg.test_fraction = kv::to_double(key, value);
    else if (key == "projection") {
      const auto p = kv::lower(value);
      if (p == "orthographic") cfg.projection = Projection::kOrthographic;
      else if (p == "pinhole") cfg.projection = Projection::kPinhole;
      else throw ConfigError("projection must be 'orthographic' or 'pinhole'");
    } else {
      throw ConfigError("unknown toyset config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ToySample sample_toy_scene(const ToySetConfig& cfg, std::uint64_t seed, std::size_t index) {
  cfg.validate();
  ToySample sample;
  sample.scene_id = scene_name(index);
  RandomStream rng(seed, sample.scene_id, "toyset");

  const double u = rng.uniform(0.0, 1.0);
  sample.split = u < cfg.test_fraction                      ? "test"
                 : u < cfg.test_fraction + cfg.val_fraction ? "val"
                                                            : "train";
  ToyScene& scene = sample.scene;
  scene.kappa = cfg.kappa;
  scene.ground = cfg.ground;
  scene.channels = cfg.channels;
  const auto count = rng.uniform_int(cfg.min_spheres, cfg.max_spheres);
  for (std::int64_t i = 0; i < count; ++i) {
    Sphere s;
    s.radius = rng.uniform(0.25, 0.7);
    s.center = {rng.uniform(-0.9, 0.9), rng.uniform(-0.7, 0.7), s.radius};
    for (double& a : s.albedo) a = rng.uniform(0.4, 1.0);
    if (cfg.channels == 1) s.albedo = {s.albedo[0], s.albedo[0], s.albedo[0]};
    scene.spheres.push_back(s);
  }
  const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double el = rng.uniform(std::numbers::pi / 4.0, std::numbers::pi / 2.0);
  scene.light = normalized({std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)});
  sample.camera.projection = cfg.projection;
  return sample;
}

}  // namespace polarsfp::scene
