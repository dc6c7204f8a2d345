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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polarsfp::cli {

struct EvalOptions {
  std::filesystem::path pred_dir;
  std::filesystem::path gt_dir;
  std::filesystem::path mask_dir;  // defaults to gt_dir when empty
  std::vector<double> thresholds = {11.25, 22.50};
  std::string weighting = "image";  // image | pixel
  std::filesystem::path out;        // report file; stdout only when empty
};

/// Scores every `{id}_normal.{pfm,png}` in gt_dir against the same name in
/// pred_dir, gated by `{id}_mask.png`. Writes the report and prints the summary
/// record on `out`.
int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace polarsfp::cli
