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

// Stand-alone evaluator. It links only the eval command library, so it builds
// without the augmentation code.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "cmd_eval.hpp"

namespace cli = polarsfp::cli;

int main(int argc, char** argv) {
  CLI::App app{"polarsfp-eval: score predicted normal maps"};
  cli::EvalOptions eval;
  std::string thresholds = "11.25,22.5";
  app.add_option("--pred", eval.pred_dir, "Directory of predicted {id}_normal files")->required();
  app.add_option("--gt", eval.gt_dir, "Directory of ground-truth {id}_normal files")->required();
  app.add_option("--mask", eval.mask_dir, "Directory of {id}_mask.png (default: --gt)");
  app.add_option("--thresholds", thresholds, "Comma-separated accuracy thresholds in degrees");
  app.add_option("--weighting", eval.weighting, "image | pixel");
  app.add_option("--out", eval.out, "Report file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? cli::kExitOk : cli::kExitUsage;
  }
  return cli::guarded(std::cerr, [&] {
    eval.thresholds = cli::parse_thresholds(thresholds);
    return cli::run_eval(eval, std::cout, std::cerr);
  });
}
