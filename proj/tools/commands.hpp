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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace polarsfp::cli {

struct ConvertOptions {
  std::string direction;          // quad2stokes | stokes2quad | stokes2cue
  std::filesystem::path input;    // path prefix, e.g. data/scene_00001
  std::filesystem::path out_dir;  // defaults to the input's directory
  bool luminance = false;         // stokes2cue: collapse RGB to one channel first
};
int run_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err);

struct AugmentOptions {
  std::filesystem::path manifest;
  std::filesystem::path config;  // optional
  std::filesystem::path out_dir;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};
int run_augment(const AugmentOptions& opts, std::ostream& out, std::ostream& err);

struct ScenegenOptions {
  std::filesystem::path catalog;
  std::filesystem::path config;  // optional sampler overrides
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  int jobs = 1;
};
int run_scenegen(const ScenegenOptions& opts, std::ostream& out, std::ostream& err);

struct ToysetOptions {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::filesystem::path config;  // optional
  std::filesystem::path out_dir;
  int jobs = 1;
};
int run_toyset(const ToysetOptions& opts, std::ostream& out, std::ostream& err);

struct ColorizeOptions {
  std::filesystem::path input;
  std::string kind;            // aolp | dolp | normal
  std::filesystem::path dolp;  // aolp only: optional value modulation
  std::filesystem::path out;
  int channel = 0;
};
int run_colorize(const ColorizeOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace polarsfp::cli
