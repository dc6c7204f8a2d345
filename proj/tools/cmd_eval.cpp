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

// Evaluation command. Links against metrics and imageio only: the augmentation
// library is training-side and must stay out of this dependency set.

#include "cmd_eval.hpp"

#include <algorithm>

#include "cli_common.hpp"
#include "polarsfp/imageio.hpp"
#include "polarsfp/metrics.hpp"

namespace polarsfp::cli {

namespace {

constexpr std::string_view kNormalSuffix = "_normal";

std::vector<std::string> discover_ids(const fs::path& gt_dir) {
  if (!fs::is_directory(gt_dir)) throw IoError("ground-truth directory not found: " + gt_dir.string());
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(gt_dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext != ".pfm" && ext != ".png") continue;
    const auto stem = entry.path().stem().string();
    if (stem.size() <= kNormalSuffix.size() ||
        stem.compare(stem.size() - kNormalSuffix.size(), kNormalSuffix.size(), kNormalSuffix) != 0) {
      continue;
    }
    ids.push_back(stem.substr(0, stem.size() - kNormalSuffix.size()));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

NormalMap load_normals(const fs::path& dir, const std::string& id, const ForegroundMask& mask) {
  const fs::path pfm = dir / io::plane_filename(id, "normal", "pfm");
  if (fs::exists(pfm)) return NormalMap(io::read_float_image(pfm));
  const fs::path png = dir / io::plane_filename(id, "normal", "png");
  if (fs::exists(png)) return io::decode_normal_image(io::read_png8(png), mask);
  throw IoError("missing normal map for " + id + " in " + dir.string());
}

}  // namespace

int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    metrics::Weighting weighting;
    if (opts.weighting == "image") {
      weighting = metrics::Weighting::kImageMean;
    } else if (opts.weighting == "pixel") {
      weighting = metrics::Weighting::kPixelWeighted;
    } else {
      throw UsageError("--weighting must be 'image' or 'pixel'");
    }
    const fs::path mask_dir = opts.mask_dir.empty() ? opts.gt_dir : opts.mask_dir;
    const auto ids = discover_ids(opts.gt_dir);
    if (ids.empty()) throw IoError("no *_normal.pfm / *_normal.png files in " + opts.gt_dir.string());

    std::vector<metrics::EvalReport> reports;
    for (const auto& id : ids) {
      const fs::path mask_path = mask_dir / io::plane_filename(id, "mask", "png");
      if (!fs::exists(mask_path)) throw IoError("missing mask for " + id + ": " + mask_path.string());
      const ForegroundMask mask = io::read_mask(mask_path);
      const NormalMap gt = load_normals(opts.gt_dir, id, mask);
      const NormalMap pred = load_normals(opts.pred_dir, id, mask);
      try {
        reports.push_back(metrics::evaluate(pred, gt, mask, opts.thresholds, id));
      } catch (const EvaluationError& e) {
        throw EvaluationError(id + ": " + e.what());
      }
    }
    const auto summary = metrics::aggregate(reports, weighting);
    const std::string text = metrics::format_report(summary);
    if (!opts.out.empty()) {
      if (opts.out.has_parent_path()) ensure_directory(opts.out.parent_path());
      OutputTransaction tx;
      io::write_file_atomic(tx.add(opts.out), text);
      tx.commit();
    }
    // Last line of the report is the summary record.
    const auto cut = text.rfind('\n', text.size() - 2);
    out << (cut == std::string::npos ? text : text.substr(cut + 1));
    return kExitOk;
  });
}

}  // namespace polarsfp::cli
