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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "cmd_eval.hpp"
#include "commands.hpp"

namespace cli = polarsfp::cli;

int main(int argc, char** argv) {
  CLI::App app{"polarsfp: polarization pipeline tools (Stokes conversion, augmentation, "
               "scene sampling, normal-map evaluation)"};
  app.require_subcommand(1);

  cli::ConvertOptions convert;
  auto* c = app.add_subcommand("convert", "Convert between quad, Stokes and DoLP/AoLP planes");
  c->add_option("--direction", convert.direction, "quad2stokes | stokes2quad | stokes2cue")->required();
  c->add_option("--input", convert.input, "Input path prefix, e.g. data/scene_00001")->required();
  c->add_option("--out", convert.out_dir, "Output directory (default: input directory)");
  c->add_flag("--luminance", convert.luminance, "Collapse RGB to luminance before DoLP/AoLP");

  cli::AugmentOptions augment;
  std::string aug_mode;
  std::uint64_t aug_seed = 0;
  auto* a = app.add_subcommand("augment", "Apply sensor-aware augmentation to a Stokes dataset");
  a->add_option("--manifest", augment.manifest, "Input dataset manifest")->required();
  a->add_option("--config", augment.config, "Augmentation config (key = value)");
  a->add_option("--out", augment.out_dir, "Output directory")->required();
  auto* mode_opt = a->add_option("--mode", aug_mode, "pre | post (overrides config)");
  auto* seed_opt = a->add_option("--seed", aug_seed, "Seed (overrides config)");
  a->add_option("--jobs", augment.jobs, "Worker threads")->check(CLI::PositiveNumber);

  cli::EvalOptions eval;
  std::string thresholds = "11.25,22.5";
  auto* e = app.add_subcommand("eval", "Score predicted normal maps against ground truth");
  e->add_option("--pred", eval.pred_dir, "Directory of predicted {id}_normal files")->required();
  e->add_option("--gt", eval.gt_dir, "Directory of ground-truth {id}_normal files")->required();
  e->add_option("--mask", eval.mask_dir, "Directory of {id}_mask.png (default: --gt)");
  e->add_option("--thresholds", thresholds, "Comma-separated accuracy thresholds in degrees");
  e->add_option("--weighting", eval.weighting, "image | pixel");
  e->add_option("--out", eval.out, "Report file");

  cli::ScenegenOptions scenegen;
  auto* s = app.add_subcommand("scenegen", "Sample scene specs for an external polarized renderer");
  s->add_option("--catalog", scenegen.catalog, "Asset catalog")->required();
  s->add_option("-n,--count", scenegen.count, "Number of scenes")->required();
  s->add_option("--seed", scenegen.seed, "Seed");
  s->add_option("--config", scenegen.config, "Sampler overrides (key = value)");
  s->add_option("--out", scenegen.out_dir, "Output directory")->required();
  s->add_option("--jobs", scenegen.jobs, "Worker threads")->check(CLI::PositiveNumber);

  cli::ToysetOptions toyset;
  auto* t = app.add_subcommand("toyset", "Render a toy analytic dataset with known normals");
  t->add_option("-n,--count", toyset.count, "Number of scenes")->required();
  t->add_option("--seed", toyset.seed, "Seed");
  t->add_option("--config", toyset.config, "Toy dataset config (key = value)");
  t->add_option("--out", toyset.out_dir, "Output directory")->required();
  t->add_option("--jobs", toyset.jobs, "Worker threads")->check(CLI::PositiveNumber);

  cli::ColorizeOptions colorize;
  auto* z = app.add_subcommand("colorize", "Render a DoLP, AoLP or normal map as PNG");
  z->add_option("--input", colorize.input, "Input .pfm")->required();
  z->add_option("--kind", colorize.kind, "aolp | dolp | normal")->required();
  z->add_option("--dolp", colorize.dolp, "DoLP .pfm modulating AoLP brightness");
  z->add_option("--channel", colorize.channel, "Channel to visualize");
  z->add_option("--out", colorize.out, "Output .png");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (*c) return cli::run_convert(convert, std::cout, std::cerr);
  if (*a) {
    if (*mode_opt) augment.mode = aug_mode;
    if (*seed_opt) augment.seed = aug_seed;
    return cli::run_augment(augment, std::cout, std::cerr);
  }
  if (*e) {
    return cli::guarded(std::cerr, [&] {
      eval.thresholds = cli::parse_thresholds(thresholds);
      return cli::run_eval(eval, std::cout, std::cerr);
    });
  }
  if (*s) return cli::run_scenegen(scenegen, std::cout, std::cerr);
  if (*t) return cli::run_toyset(toyset, std::cout, std::cerr);
  return cli::run_colorize(colorize, std::cout, std::cerr);
}
