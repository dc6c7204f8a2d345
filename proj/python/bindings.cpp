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

// Python bindings. Images cross the boundary as float32 numpy arrays shaped
// (H, W) or (H, W, C); outputs keep the dimensionality of the inputs.

#include <pybind11/pybind11.h>
#include <pybind11/numpy.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>
#include <string>

#include "polarsfp/augment.hpp"
#include "polarsfp/error.hpp"
#include "polarsfp/imageio.hpp"
#include "polarsfp/metrics.hpp"
#include "polarsfp/polar.hpp"
#include "polarsfp/random.hpp"
#include "polarsfp/scenegen.hpp"

namespace py = pybind11;
using namespace polarsfp;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

Image to_image(const FloatArray& a) {
  if (a.ndim() != 2 && a.ndim() != 3) throw StructuralError("expected an (H, W) or (H, W, C) array");
  const int h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
  const int c = a.ndim() == 3 ? static_cast<int>(a.shape(2)) : 1;
  Image img(h, w, c);
  std::copy(a.data(), a.data() + img.size(), img.data());
  return img;
}

FloatArray to_array(const Image& img, bool squeeze) {
  std::vector<py::ssize_t> shape = {img.height(), img.width()};
  if (!(squeeze && img.channels() == 1)) shape.push_back(img.channels());
  FloatArray out(shape);
  std::copy(img.data(), img.data() + img.size(), out.mutable_data());
  return out;
}

ForegroundMask to_mask(const py::array_t<bool, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw StructuralError("mask must be a 2-D boolean array");
  ForegroundMask m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
  const bool* p = a.data();
  for (int r = 0; r < m.height(); ++r) {
    for (int c = 0; c < m.width(); ++c) m.set(r, c, p[r * m.width() + c]);
  }
  return m;
}

py::array_t<bool> from_mask(const ForegroundMask& m) {
  py::array_t<bool> out({m.height(), m.width()});
  auto v = out.mutable_unchecked<2>();
  for (int r = 0; r < m.height(); ++r) {
    for (int c = 0; c < m.width(); ++c) v(r, c) = m(r, c);
  }
  return out;
}

StokesImage to_stokes(const FloatArray& s0, const FloatArray& s1, const FloatArray& s2) {
  return StokesImage{to_image(s0), to_image(s1), to_image(s2)};
}

py::dict metrics_dict(const metrics::EvalReport& r) {
  py::dict d;
  d["mae_deg"] = r.mae_deg;
  for (std::size_t i = 0; i < r.thresholds_deg.size(); ++i) {
    d[py::str(metrics::accuracy_field_name(r.thresholds_deg[i]))] = r.accuracy[i];
  }
  d["n_pixels"] = r.n_pixels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polarsfp, m) {
  m.doc() = "Polarization image processing: Stokes conversion, augmentation, metrics, file formats";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", error.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", error.ptr());
  auto format = py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<MalformedHeaderError>(m, "MalformedHeaderError", format.ptr());
  py::register_exception<TruncatedPayloadError>(m, "TruncatedPayloadError", format.ptr());
  py::register_exception<DimensionOverflowError>(m, "DimensionOverflowError", format.ptr());
  py::register_exception<IoError>(m, "IoError", format.ptr());

  // --- Stokes and cues ------------------------------------------------------
  m.def(
      "quad_to_stokes",
      [](const FloatArray& i0, const FloatArray& i45, const FloatArray& i90, const FloatArray& i135) {
        const bool sq = i0.ndim() == 2;
        const auto s = quad_to_stokes({to_image(i0), to_image(i45), to_image(i90), to_image(i135)});
        return py::make_tuple(to_array(s.s0, sq), to_array(s.s1, sq), to_array(s.s2, sq));
      },
      py::arg("i0"), py::arg("i45"), py::arg("i90"), py::arg("i135"),
      "Four polarizer planes -> (s0, s1, s2).");
  m.def(
      "stokes_to_quad",
      [](const FloatArray& s0, const FloatArray& s1, const FloatArray& s2) {
        const bool sq = s0.ndim() == 2;
        const auto q = stokes_to_quad(to_stokes(s0, s1, s2));
        return py::make_tuple(to_array(q.i0, sq), to_array(q.i45, sq), to_array(q.i90, sq),
                              to_array(q.i135, sq));
      },
      py::arg("s0"), py::arg("s1"), py::arg("s2"), "(s0, s1, s2) -> (i0, i45, i90, i135).");
  m.def(
      "stokes_to_dolp",
      [](const FloatArray& s0, const FloatArray& s1, const FloatArray& s2, float epsilon, bool lum) {
        const auto mode = lum ? CueChannels::kLuminance : CueChannels::kPerChannel;
        return to_array(stokes_to_dolp(to_stokes(s0, s1, s2), epsilon, mode).map, s0.ndim() == 2 || lum);
      },
      py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("epsilon") = kDefaultDolpEpsilon,
      py::arg("luminance") = false, "Degree of linear polarization in [0, 1].");
  m.def(
      "stokes_to_aolp",
      [](const FloatArray& s0, const FloatArray& s1, const FloatArray& s2, bool lum) {
        const auto mode = lum ? CueChannels::kLuminance : CueChannels::kPerChannel;
        return to_array(stokes_to_aolp(to_stokes(s0, s1, s2), mode).map, s0.ndim() == 2 || lum);
      },
      py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("luminance") = false,
      "Angle of linear polarization in radians, (-pi/2, pi/2].");

  // --- Augmentation ---------------------------------------------------------
  py::class_<augment::AugmentConfig>(m, "AugmentConfig")
      .def(py::init<>())
      .def_readwrite("blur_kernels", &augment::AugmentConfig::blur_kernels)
      .def_readwrite("noise_sigma_min", &augment::AugmentConfig::noise_sigma_min)
      .def_readwrite("noise_sigma_max", &augment::AugmentConfig::noise_sigma_max)
      .def_readwrite("quant_bits", &augment::AugmentConfig::quant_bits)
      .def_readwrite("enable_blur", &augment::AugmentConfig::enable_blur)
      .def_readwrite("enable_noise", &augment::AugmentConfig::enable_noise)
      .def_readwrite("enable_quant", &augment::AugmentConfig::enable_quant)
      .def_readwrite("seed", &augment::AugmentConfig::seed)
      .def_property(
          "mode", [](const augment::AugmentConfig& c) { return std::string(augment::to_string(c.mode)); },
          [](augment::AugmentConfig& c, const std::string& v) { c.mode = augment::parse_mode(v); })
      .def("validate", &augment::AugmentConfig::validate)
      .def_static("parse", &augment::parse_augment_config, py::arg("text"))
      .def("format", [](const augment::AugmentConfig& c) { return augment::format_augment_config(c); });

  m.def(
      "augment",
      [](const FloatArray& s0, const FloatArray& s1, const FloatArray& s2,
         const augment::AugmentConfig& cfg, const std::string& scene_id) {
        const bool sq = s0.ndim() == 2;
        const auto res = augment::run(to_stokes(s0, s1, s2), cfg,
                                      RandomStream(cfg.seed, scene_id, "augment"));
        py::dict d;
        d["rgb"] = to_array(res.rgb, sq);
        d["dolp"] = to_array(res.dolp.map, sq);
        d["aolp"] = to_array(res.aolp.map, sq);
        d["kernel"] = res.draws.kernel;
        d["noise_sigma"] = res.draws.noise_sigma;
        return d;
      },
      py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("config") = augment::AugmentConfig{},
      py::arg("scene_id") = "scene",
      "Seeded augmentation of one scene; returns rgb, dolp, aolp and the drawn parameters.");
  m.def(
      "quantize",
      [](const FloatArray& a, int bits) { return to_array(augment::quantize(to_image(a), bits), a.ndim() == 2); },
      py::arg("values"), py::arg("bits") = 12);

  // --- Metrics --------------------------------------------------------------
  m.def(
      "evaluate",
      [](const FloatArray& pred, const FloatArray& gt,
         const py::array_t<bool, py::array::c_style | py::array::forcecast>& mask,
         const std::vector<double>& thresholds) {
        return metrics_dict(metrics::evaluate(NormalMap(to_image(pred)), NormalMap(to_image(gt)),
                                              to_mask(mask), thresholds));
      },
      py::arg("pred"), py::arg("gt"), py::arg("mask"),
      py::arg("thresholds") = metrics::kDefaultThresholds,
      "Mean angular error (degrees) and accuracy fractions over the mask.");
  m.def(
      "cosine_loss",
      [](const FloatArray& pred, const FloatArray& gt,
         const py::array_t<bool, py::array::c_style | py::array::forcecast>& mask) {
        return metrics::cosine_loss(NormalMap(to_image(pred)), NormalMap(to_image(gt)), to_mask(mask));
      },
      py::arg("pred"), py::arg("gt"), py::arg("mask"));
  m.def(
      "angular_error_map",
      [](const FloatArray& pred, const FloatArray& gt) {
        return to_array(metrics::angular_error_map(NormalMap(to_image(pred)), NormalMap(to_image(gt))), true);
      },
      py::arg("pred"), py::arg("gt"));

  // --- Files ----------------------------------------------------------------
  m.def(
      "read_float_image",
      [](const std::filesystem::path& p) { return to_array(io::read_float_image(p), false); },
      py::arg("path"), "Read a PFM file as an (H, W, C) array.");
  m.def(
      "write_float_image",
      [](const std::filesystem::path& p, const FloatArray& a) { io::write_float_image(p, to_image(a)); },
      py::arg("path"), py::arg("image"));
  m.def(
      "read_mask", [](const std::filesystem::path& p) { return from_mask(io::read_mask(p)); },
      py::arg("path"));

  // --- Scenes ---------------------------------------------------------------
  m.def(
      "sample_scene_spec",
      [](const std::string& catalog, std::uint64_t seed, std::size_t index) {
        return scene::format_scene_spec(scene::sample_scene(scene::parse_catalog(catalog), seed, index));
      },
      py::arg("catalog"), py::arg("seed"), py::arg("index"),
      "Sample one scene from catalog text and return its spec text.");
  m.def(
      "render_toy_scene",
      [](std::uint64_t seed, std::size_t index, int height, int width, int channels) {
        scene::ToySetConfig cfg;
        cfg.height = height;
        cfg.width = width;
        cfg.channels = channels;
        const auto sample = scene::sample_toy_scene(cfg, seed, index);
        const auto r = scene::toy_render(sample.scene, {height, width}, sample.camera);
        py::dict d;
        d["scene_id"] = sample.scene_id;
        d["s0"] = to_array(r.stokes.s0, channels == 1);
        d["s1"] = to_array(r.stokes.s1, channels == 1);
        d["s2"] = to_array(r.stokes.s2, channels == 1);
        d["normal"] = to_array(r.normals.map, false);
        d["mask"] = from_mask(r.mask);
        return d;
      },
      py::arg("seed"), py::arg("index"), py::arg("height") = 64, py::arg("width") = 80,
      py::arg("channels") = 1, "Render one toy analytic scene with exact normals.");
}
