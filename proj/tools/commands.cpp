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

#include "commands.hpp"

#include <array>
#include <mutex>

#include "cli_common.hpp"
#include "polarsfp/augment.hpp"
#include "polarsfp/imageio.hpp"
#include "polarsfp/polar.hpp"
#include "polarsfp/scenegen.hpp"

namespace polarsfp::cli {

namespace {

constexpr std::array<const char*, 4> kQuadPlanes = {"i0", "i45", "i90", "i135"};
constexpr std::array<const char*, 3> kStokesPlanes = {"s0", "s1", "s2"};

struct Prefix {
  fs::path dir;
  std::string base;

  fs::path plane(std::string_view name, std::string_view ext = "pfm") const {
    return dir / io::plane_filename(base, name, ext);
  }
};

Prefix split_prefix(const fs::path& p) {
  if (p.filename().empty()) throw UsageError("--input must be a path prefix such as data/scene_00001");
  return {p.parent_path(), p.filename().string()};
}

Image read_plane(const fs::path& path, std::string_view name) {
  if (!fs::exists(path)) {
    throw IoError("missing plane '" + std::string(name) + "': " + path.string());
  }
  return io::read_float_image(path);
}

std::string read_text(const fs::path& path) {
  try {
    return io::read_file(path);
  } catch (const IoError&) {
    throw ConfigError("cannot open config file " + path.string());
  }
}

StokesImage read_stokes(const fs::path& manifest_dir, const io::ManifestRecord& rec) {
  StokesImage s;
  std::array<Image*, 3> planes = {&s.s0, &s.s1, &s.s2};
  for (std::size_t i = 0; i < 3; ++i) {
    *planes[i] = read_plane(io::resolve_plane(manifest_dir, rec, kStokesPlanes[i]), kStokesPlanes[i]);
  }
  s.check();
  return s;
}

}  // namespace

int run_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Prefix in = split_prefix(opts.input);
    const Prefix dst{opts.out_dir.empty() ? in.dir : opts.out_dir, in.base};
    if (!dst.dir.empty()) ensure_directory(dst.dir);
    OutputTransaction tx;

    if (opts.direction == "quad2stokes") {
      QuadPolarImage q;
      std::array<Image*, 4> planes = {&q.i0, &q.i45, &q.i90, &q.i135};
      for (std::size_t i = 0; i < 4; ++i) *planes[i] = read_plane(in.plane(kQuadPlanes[i]), kQuadPlanes[i]);
      const StokesImage s = quad_to_stokes(q);
      io::write_float_image(tx.add(dst.plane("s0")), s.s0);
      io::write_float_image(tx.add(dst.plane("s1")), s.s1);
      io::write_float_image(tx.add(dst.plane("s2")), s.s2);
    } else if (opts.direction == "stokes2quad" || opts.direction == "stokes2cue") {
      StokesImage s;
      std::array<Image*, 3> planes = {&s.s0, &s.s1, &s.s2};
      for (std::size_t i = 0; i < 3; ++i) *planes[i] = read_plane(in.plane(kStokesPlanes[i]), kStokesPlanes[i]);
      if (opts.direction == "stokes2quad") {
        const QuadPolarImage q = stokes_to_quad(s);
        io::write_float_image(tx.add(dst.plane("i0")), q.i0);
        io::write_float_image(tx.add(dst.plane("i45")), q.i45);
        io::write_float_image(tx.add(dst.plane("i90")), q.i90);
        io::write_float_image(tx.add(dst.plane("i135")), q.i135);
      } else {
        const auto mode = opts.luminance ? CueChannels::kLuminance : CueChannels::kPerChannel;
        io::write_float_image(tx.add(dst.plane("dolp")), stokes_to_dolp(s, kDefaultDolpEpsilon, mode).map);
        io::write_float_image(tx.add(dst.plane("aolp")), stokes_to_aolp(s, mode).map);
      }
    } else {
      throw UsageError("--direction must be quad2stokes, stokes2quad or stokes2cue");
    }
    tx.commit();
    out << "converted " << in.base << " (" << opts.direction << ")\n";
    return kExitOk;
  });
}

int run_augment(const AugmentOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    augment::AugmentConfig cfg;
    if (!opts.config.empty()) cfg = augment::parse_augment_config(read_text(opts.config));
    if (opts.mode) cfg.mode = augment::parse_mode(*opts.mode);
    if (opts.seed) cfg.seed = *opts.seed;
    cfg.validate();
    if (opts.out_dir.empty()) throw UsageError("--out is required");

    const io::Manifest in_manifest = io::read_manifest(opts.manifest);
    const fs::path in_dir = opts.manifest.parent_path();
    ensure_directory(opts.out_dir);
    OutputTransaction tx;

    io::Manifest out_manifest;
    out_manifest.records.resize(in_manifest.records.size());
    parallel_for(in_manifest.records.size(), opts.jobs, [&](std::size_t i) {
      const auto& rec = in_manifest.records[i];
      const StokesImage s = read_stokes(in_dir, rec);
      const RandomStream rng(cfg.seed, rec.scene_id, "augment");
      const augment::AugmentResult res = augment::run(s, cfg, rng);

      io::ManifestRecord o{rec.scene_id, rec.split, {}};
      auto emit = [&](std::string_view plane, std::string_view ext) {
        const std::string name = io::plane_filename(rec.scene_id, plane, ext);
        o.files[std::string(plane)] = name;
        return tx.add(opts.out_dir / name);
      };
      io::write_float_image(emit("s0", "pfm"), res.rgb);
      io::write_float_image(emit("dolp", "pfm"), res.dolp.map);
      io::write_float_image(emit("aolp", "pfm"), res.aolp.map);
      if (res.sensor && cfg.enable_quant) {
        const std::array<const Image*, 4> quad = {&res.sensor->i0, &res.sensor->i45,
                                                  &res.sensor->i90, &res.sensor->i135};
        for (std::size_t k = 0; k < 4; ++k) {
          io::write_code_png(emit(kQuadPlanes[k], "png"), *quad[k], cfg.quant_bits);
        }
      }
      for (const char* plane : {"normal", "mask"}) {
        const auto it = rec.files.find(plane);
        if (it == rec.files.end()) continue;
        const fs::path src = in_dir / it->second;
        const std::string ext = src.extension().string();
        io::write_file_atomic(emit(plane, ext.empty() ? "bin" : ext.substr(1)), io::read_file(src));
      }
      out_manifest.records[i] = std::move(o);
    });

    io::write_file_atomic(tx.add(opts.out_dir / "augment.cfg"), augment::format_augment_config(cfg));
    io::write_manifest(tx.add(opts.out_dir / "manifest.txt"), out_manifest);
    tx.commit();
    out << "augmented " << out_manifest.records.size() << " scenes (mode "
        << augment::to_string(cfg.mode) << ")\n";
    return kExitOk;
  });
}

int run_scenegen(const ScenegenOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const scene::AssetCatalog catalog = scene::load_catalog(opts.catalog);
    scene::SamplerConfig cfg;
    if (!opts.config.empty()) cfg = scene::parse_sampler_config(read_text(opts.config));
    if (opts.out_dir.empty()) throw UsageError("--out is required");
    ensure_directory(opts.out_dir);
    OutputTransaction tx;

    std::vector<std::string> names(opts.count);
    parallel_for(opts.count, opts.jobs, [&](std::size_t i) {
      const scene::SceneSpec spec = scene::sample_scene(catalog, opts.seed, i, cfg);
      names[i] = spec.scene_id + ".scene";
      scene::export_scene_spec(tx.add(opts.out_dir / names[i]), spec);
    });
    std::string index;
    for (const auto& n : names) index += n + "\n";
    io::write_file_atomic(tx.add(opts.out_dir / "scenes.txt"), index);
    tx.commit();
    out << "wrote " << opts.count << " scene specs\n";
    return kExitOk;
  });
}

int run_toyset(const ToysetOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    scene::ToySetConfig cfg;
    if (!opts.config.empty()) cfg = scene::parse_toyset_config(read_text(opts.config));
    if (opts.out_dir.empty()) throw UsageError("--out is required");
    ensure_directory(opts.out_dir);
    OutputTransaction tx;

    io::Manifest manifest;
    manifest.records.resize(opts.count);
    parallel_for(opts.count, opts.jobs, [&](std::size_t i) {
      const scene::ToySample sample = scene::sample_toy_scene(cfg, opts.seed, i);
      const scene::ToyRender r =
          scene::toy_render(sample.scene, {cfg.height, cfg.width}, sample.camera);
      io::ManifestRecord rec{sample.scene_id, sample.split, {}};
      auto emit = [&](std::string_view plane, std::string_view ext) {
        const std::string name = io::plane_filename(sample.scene_id, plane, ext);
        rec.files[std::string(plane)] = name;
        return tx.add(opts.out_dir / name);
      };
      io::write_float_image(emit("s0", "pfm"), r.stokes.s0);
      io::write_float_image(emit("s1", "pfm"), r.stokes.s1);
      io::write_float_image(emit("s2", "pfm"), r.stokes.s2);
      io::write_float_image(emit("normal", "pfm"), r.normals.map);
      io::write_mask(emit("mask", "png"), r.mask);
      manifest.records[i] = std::move(rec);
    });
    io::write_manifest(tx.add(opts.out_dir / "manifest.txt"), manifest);
    tx.commit();
    out << "rendered " << opts.count << " toy scenes\n";
    return kExitOk;
  });
}

int run_colorize(const ColorizeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::exists(opts.input)) throw IoError("missing input " + opts.input.string());
    fs::path dst = opts.out;
    if (dst.empty()) {
      dst = opts.input;
      dst.replace_extension(".png");
    }
    const Image img = io::read_float_image(opts.input);
    io::ByteImage rgb;
    if (opts.kind == "aolp") {
      if (opts.dolp.empty()) {
        rgb = io::colorize_aolp(AolpMap{img}, nullptr, opts.channel);
      } else {
        const DolpMap d{io::read_float_image(opts.dolp)};
        rgb = io::colorize_aolp(AolpMap{img}, &d, opts.channel);
      }
    } else if (opts.kind == "dolp") {
      rgb = io::colorize_dolp(DolpMap{img}, opts.channel);
    } else if (opts.kind == "normal") {
      rgb = io::colorize_normals(NormalMap(img));
    } else {
      throw UsageError("--kind must be aolp, dolp or normal");
    }
    OutputTransaction tx;
    io::write_png(tx.add(dst), rgb);
    tx.commit();
    out << "wrote " << dst.string() << "\n";
    return kExitOk;
  });
}

}  // namespace polarsfp::cli
