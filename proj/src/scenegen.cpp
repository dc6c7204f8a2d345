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

#include "polarsfp/scenegen.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"
#include "polarsfp/keyvalue.hpp"

namespace polarsfp::scene {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double scene_real(std::string_view field, std::string_view text) {
  try {
    return kv::to_double(field, text);
  } catch (const ConfigError& e) {
    throw FormatError(std::string("scene spec: ") + e.what());
  }
}

int scene_int(std::string_view field, std::string_view text) {
  try {
    return kv::to_int(field, text);
  } catch (const ConfigError& e) {
    throw FormatError(std::string("scene spec: ") + e.what());
  }
}

bool overlaps(const Placement& a, double ra, const Placement& b, double rb) {
  const double d = std::hypot(a.x - b.x, a.y - b.y);
  return !(d > a.scale * ra + b.scale * rb);
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog

void AssetCatalog::validate() const {
  if (objects.empty()) throw ConfigError("asset catalog has no objects");
  if (envmaps.empty()) throw ConfigError("asset catalog has no environment maps");
  for (const auto& o : objects) {
    if (!valid_id(o.id)) throw ConfigError("asset catalog: invalid object id '" + o.id + "'");
    if (!(o.radius > 0.0) || !std::isfinite(o.radius)) {
      throw ConfigError("asset catalog: object '" + o.id + "' needs a positive radius");
    }
  }
  for (const auto& e : envmaps) {
    if (!valid_id(e)) throw ConfigError("asset catalog: invalid envmap id '" + e + "'");
  }
}

const CatalogObject& AssetCatalog::object(std::string_view id) const {
  for (const auto& o : objects) {
    if (o.id == id) return o;
  }
  throw ConfigError("asset catalog has no object '" + std::string(id) + "'");
}

AssetCatalog parse_catalog(std::string_view text) {
  AssetCatalog cat;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = kv::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_ws(line);
    const std::string where = "catalog line " + std::to_string(line_no);
    if (f[0] == "object" && f.size() == 3) {
      cat.objects.push_back({std::string(f[1]), kv::to_double("radius", f[2])});
    } else if (f[0] == "envmap" && f.size() == 2) {
      cat.envmaps.emplace_back(f[1]);
    } else {
      throw ConfigError(where + ": expected 'object <id> <radius>' or 'envmap <id>'");
    }
  }
  cat.validate();
  return cat;
}

AssetCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

// ---------------------------------------------------------------------------
// Sampling

void SamplerConfig::validate() const {
  if (min_objects < 1 || max_objects < min_objects) {
    throw ConfigError("object count range must satisfy 1 <= min_objects <= max_objects");
  }
  if (!(scale_min > 0.0) || !(scale_max >= scale_min)) throw ConfigError("invalid scale range");
  if (!(disk_radius > 0.0)) throw ConfigError("disk_radius must be positive");
  if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  if (!(elevation_min_deg > 0.0) || !(elevation_max_deg >= elevation_min_deg) ||
      elevation_max_deg > 90.0) {
    throw ConfigError("elevation range must lie in (0, 90] degrees");
  }
  if (!(camera_radius_min > 0.0) || !(camera_radius_max >= camera_radius_min)) {
    throw ConfigError("invalid camera radius range");
  }
  if (height < 1 || width < 1) throw ConfigError("resolution must be positive");
}

SamplerConfig parse_sampler_config(std::string_view text) {
  SamplerConfig cfg;
  for (const auto& [key, value] : kv::parse(text)) {
    if (key == "min_objects") cfg.min_objects = kv::to_int(key, value);
    else if (key == "max_objects") cfg.max_objects = kv::to_int(key, value);
    else if (key == "scale_min") cfg.scale_min = kv::to_double(key, value);
    else if (key == "scale_max") cfg.scale_max = kv::to_double(key, value);
    else if (key == "disk_radius") cfg.disk_radius = kv::to_double(key, value);
    else if (key == "max_attempts") cfg.max_attempts = kv::to_int(key, value);
    else if (key == "elevation_min_deg") cfg.elevation_min_deg = kv::to_double(key, value);
    else if (key == "elevation_max_deg") cfg.elevation_max_deg = kv::to_double(key, value);
    else if (key == "camera_radius_min") cfg.camera_radius_min = kv::to_double(key, value);
    else if (key == "camera_radius_max") cfg.camera_radius_max = kv::to_double(key, value);
    else if (key == "height") cfg.height = kv::to_int(key, value);
    else if (key == "width") cfg.width = kv::to_int(key, value);
    else throw ConfigError("unknown scene sampler key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

std::string scene_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "scene_%05zu", index);
  return buf;
}

SceneSpec sample_scene(const AssetCatalog& catalog, RandomStream& rng, const SamplerConfig& cfg) {
  catalog.validate();
  cfg.validate();
  SceneSpec spec;
  spec.scene_id = rng.scene_id();
  spec.height = cfg.height;
  spec.width = cfg.width;

  const auto count = rng.uniform_int(cfg.min_objects, cfg.max_objects);
  std::vector<double> radii;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& obj = catalog.objects[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(catalog.objects.size()) - 1))];
    Placement p;
    p.object_id = obj.id;
    p.scale = rng.uniform(cfg.scale_min, cfg.scale_max);
    p.yaw = rng.uniform(0.0, 2.0 * kPi);
    bool placed = false;
    for (int attempt = 0; attempt < cfg.max_attempts && !placed; ++attempt) {
      const double r = cfg.disk_radius * std::sqrt(rng.uniform(0.0, 1.0));
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      p.x = r * std::cos(phi);
      p.y = r * std::sin(phi);
      placed = true;
      for (std::size_t j = 0; j < spec.placements.size(); ++j) {
        if (overlaps(p, obj.radius, spec.placements[j], radii[j])) {
          placed = false;
          break;
        }
      }
    }
    if (!placed) continue;  // dropped; the first object always lands
    spec.placements.push_back(p);
    radii.push_back(obj.radius);
  }

  spec.envmap_id = catalog.envmaps[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(catalog.envmaps.size()) - 1))];
  spec.env_rotation = rng.uniform(0.0, 2.0 * kPi);
  spec.camera.azimuth = rng.uniform(0.0, 2.0 * kPi);
  spec.camera.elevation = rng.uniform(cfg.elevation_min_deg * kDeg, cfg.elevation_max_deg * kDeg);
  spec.camera.radius = rng.uniform(cfg.camera_radius_min, cfg.camera_radius_max);
  return spec;
}

SceneSpec sample_scene(const AssetCatalog& catalog, std::uint64_t seed, std::size_t index,
                       const SamplerConfig& cfg) {
  RandomStream rng(seed, scene_name(index), "scenegen");
  return sample_scene(catalog, rng, cfg);
}

std::vector<std::string> check_scene(const SceneSpec& spec, const AssetCatalog& catalog,
                                     const SamplerConfig& cfg) {
  std::vector<std::string> issues;
  const auto n = static_cast<int>(spec.placements.size());
  if (n < 1 || n > cfg.max_objects) issues.push_back("placement count " + std::to_string(n));
  std::vector<double> radii;
  for (const auto& p : spec.placements) {
    try {
      radii.push_back(catalog.object(p.object_id).radius);
    } catch (const ConfigError&) {
      issues.push_back("unknown object " + p.object_id);
      radii.push_back(0.0);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (overlaps(spec.placements[i], radii[i], spec.placements[j], radii[j])) {
        issues.push_back("placements " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  if (!(spec.camera.elevation > 0.0) || spec.camera.elevation > kPi / 2.0) {
    issues.push_back("camera elevation outside (0, pi/2]");
  }
  if (!(spec.camera.radius > 0.0)) issues.push_back("camera radius not positive");
  return issues;
}

// ---------------------------------------------------------------------------
// Scene-spec text format

std::string format_scene_spec(const SceneSpec& spec) {
  if (!valid_id(spec.scene_id) || !valid_id(spec.envmap_id)) {
    throw ParameterError("scene spec ids must be non-empty and whitespace-free");
  }
  using kv::format_double;
  std::string out(kSceneVersionTag);
  out += "\nscene_id " + spec.scene_id;
  out += "\nresolution " + std::to_string(spec.height) + " " + std::to_string(spec.width);
  out += "\nenvmap " + spec.envmap_id;
  out += "\nenv_rotation " + format_double(spec.env_rotation);
  out += "\ncamera " + format_double(spec.camera.azimuth) + " " +
         format_double(spec.camera.elevation) + " " + format_double(spec.camera.radius);
  for (const auto& p : spec.placements) {
    if (!valid_id(p.object_id)) throw ParameterError("scene spec: invalid object id");
    out += "\nplacement " + p.object_id + " " + format_double(p.scale) + " " + format_double(p.x) +
           " " + format_double(p.y) + " " + format_double(p.yaw);
  }
  out += "\n";
  return out;
}

SceneSpec parse_scene_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  bool tagged = false;
  bool have_id = false, have_res = false, have_env = false, have_rot = false, have_cam = false;
  SceneSpec spec;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = kv::trim(raw);
    if (line.empty()) continue;
    if (!tagged) {
      if (line != kSceneVersionTag) {
        throw FormatError("scene spec: first line must be '" + std::string(kSceneVersionTag) + "'");
      }
      tagged = true;
      continue;
    }
    const auto f = split_ws(line);
    const std::string where = "scene spec line " + std::to_string(line_no);
    auto expect = [&](std::size_t n) {
      if (f.size() != n) throw FormatError(where + ": wrong field count for '" + std::string(f[0]) + "'");
    };
    if (f[0] == "scene_id") {
      expect(2);
      spec.scene_id = f[1];
      have_id = true;
    } else if (f[0] == "resolution") {
      expect(3);
      spec.height = scene_int("height", f[1]);
      spec.width = scene_int("width", f[2]);
      have_res = true;
    } else if (f[0] == "envmap") {
      expect(2);
      spec.envmap_id = f[1];
      have_env = true;
    } else if (f[0] == "env_rotation") {
      expect(2);
      spec.env_rotation = scene_real("env_rotation", f[1]);
      have_rot = true;
    } else if (f[0] == "camera") {
      expect(4);
      spec.camera = {scene_real("azimuth", f[1]), scene_real("elevation", f[2]),
                     scene_real("radius", f[3])};
      have_cam = true;
    } else if (f[0] == "placement") {
      expect(6);
      spec.placements.push_back({std::string(f[1]), scene_real("scale", f[2]), scene_real("x", f[3]),
                                 scene_real("y", f[4]), scene_real("yaw", f[5])});
    } else {
      throw FormatError(where + ": unknown field '" + std::string(f[0]) + "'");
    }
  }
  if (!tagged) throw FormatError("scene spec: missing version tag");
  if (!(have_id && have_res && have_env && have_rot && have_cam)) {
    throw FormatError("scene spec: missing required field");
  }
  return spec;
}

void export_scene_spec(const std::filesystem::path& path, const SceneSpec& spec) {
  io::write_file_atomic(path, format_scene_spec(spec));
}

SceneSpec import_scene_spec(const std::filesystem::path& path) {
  return parse_scene_spec(io::read_file(path));
}

}  // namespace polarsfp::scene
