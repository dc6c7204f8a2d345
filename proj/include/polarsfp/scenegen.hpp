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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "polarsfp/image.hpp"
#include "polarsfp/random.hpp"

namespace polarsfp::scene {

// ---------------------------------------------------------------------------
// Scene sampling

struct CatalogObject {
  std::string id;
  double radius = 0.0;  // bounding-circle radius on the ground plane, meters
  friend bool operator==(const CatalogObject&, const CatalogObject&) = default;
};

struct AssetCatalog {
  std::vector<CatalogObject> objects;
  std::vector<std::string> envmaps;

  /// Throws ConfigError for empty lists, non-positive radii or blank ids.
  void validate() const;
  const CatalogObject& object(std::string_view id) const;
};

/// Lines `object <id> <radius>` and `envmap <id>`; '#' starts a comment line.
AssetCatalog parse_catalog(std::string_view text);
AssetCatalog load_catalog(const std::filesystem::path& path);

struct Placement {
  std::string object_id;
  double scale = 1.0;
  double x = 0.0;  // meters, ground plane z = 0
  double y = 0.0;
  double yaw = 0.0;  // radians
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Camera on the upper hemisphere looking at the origin.
struct CameraPose {
  double azimuth = 0.0;    // radians
  double elevation = 0.0;  // radians, (0, pi/2]
  double radius = 0.0;     // meters
  friend bool operator==(const CameraPose&, const CameraPose&) = default;
};

struct SceneSpec {
  std::string scene_id;
  std::vector<Placement> placements;
  std::string envmap_id;
  double env_rotation = 0.0;  // radians
  CameraPose camera;
  int height = 512;
  int width = 612;
  friend bool operator==(const SceneSpec&, const SceneSpec&) = default;
};

/// Sampling ranges. Defaults keep objects inside a 512x612 frame at typical poses.
struct SamplerConfig {
  int min_objects = 1;
  int max_objects = 10;
  double scale_min = 0.5;
  double scale_max = 2.0;
  double disk_radius = 1.5;
  int max_attempts = 100;
  double elevation_min_deg = 10.0;
  double elevation_max_deg = 80.0;
  double camera_radius_min = 1.5;
  double camera_radius_max = 3.0;
  int height = 512;
  int width = 612;

  void validate() const;
};

/// Keys match the SamplerConfig field names.
SamplerConfig parse_sampler_config(std::string_view text);

/// "scene_00042"
std::string scene_name(std::size_t index);

/// Samples one scene from `rng`; the result's scene_id is rng.scene_id().
SceneSpec sample_scene(const AssetCatalog& catalog, RandomStream& rng,
                       const SamplerConfig& cfg = {});
/// Deterministic per (seed, index), independent of any other scene.
SceneSpec sample_scene(const AssetCatalog& catalog, std::uint64_t seed, std::size_t index,
                       const SamplerConfig& cfg = {});

/// Human-readable list of violated SceneSpec invariants (empty when valid).
std::vector<std::string> check_scene(const SceneSpec& spec, const AssetCatalog& catalog,
                                     const SamplerConfig& cfg = {});

inline constexpr std::string_view kSceneVersionTag = "polarsfp-scene 1";

/// Version tag line first, then fields in fixed order. Reals use the shortest
/// round-trip decimal form, so export/import is bit-exact.
std::string format_scene_spec(const SceneSpec& spec);
SceneSpec parse_scene_spec(std::string_view text);
void export_scene_spec(const std::filesystem::path& path, const SceneSpec& spec);
SceneSpec import_scene_spec(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Toy forward model
//
// A non-physical stand-in for a polarized renderer. Zenith angle drives DoLP
// (kappa sin^2 theta) and the normal's image-plane azimuth drives AoLP, so the
// ground truth is known exactly. It does not model Fresnel reflection.

struct Sphere {
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double radius = 1.0;
  std::array<double, 3> albedo{1.0, 1.0, 1.0};
};

struct ToyScene {
  std::vector<Sphere> spheres;
  bool ground = true;  // plane z = 0, rendered but outside the mask
  std::array<double, 3> light{0.0, 0.0, 1.0};
  double kappa = 0.6;
  int channels = 1;  // 1 or 3

  void validate() const;
};

enum class Projection { kOrthographic, kPinhole };

/// Axis-aligned camera on the +z axis looking toward -z, so camera space and
/// world space coincide (+x right, +y up, +z toward the camera).
struct ToyCamera {
  Projection projection = Projection::kOrthographic;
  double view_height = 2.5;  // orthographic: world extent covered by the image height
  double distance = 6.0;     // camera z position
  double fov_deg = 40.0;     // pinhole: vertical field of view
};

struct Resolution {
  int height = 512;
  int width = 612;
};

struct ToyRender {
  StokesImage stokes;
  NormalMap normals;
  ForegroundMask mask;
};

/// Floor on s0 for lit pixels.
inline constexpr double kMinShading = 0.1;

ToyRender toy_render(const ToyScene& scene, Resolution res, const ToyCamera& camera = {});

/// Closed-form cues of the toy model for a unit normal n viewed along v.
double toy_dolp(const std::array<double, 3>& n, const std::array<double, 3>& v, double kappa);
double toy_aolp(const std::array<double, 3>& n);

struct ToySetConfig {
  int height = 512;
  int width = 612;
  int channels = 3;
  double kappa = 0.6;
  int min_spheres = 1;
  int max_spheres = 4;
  bool ground = true;
  Projection projection = Projection::kOrthographic;
  double val_fraction = 0.0;
  double test_fraction = 0.0;

  void validate() const;
};

ToySetConfig parse_toyset_config(std::string_view text);

struct ToySample {
  std::string scene_id;
  std::string split;
  ToyScene scene;
  ToyCamera camera;
};

/// Deterministic per (seed, index).
ToySample sample_toy_scene(const ToySetConfig& cfg, std::uint64_t seed, std::size_t index);

}  // namespace polarsfp::scene
