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

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "polarsfp/image.hpp"

namespace polarsfp::metrics {

/// Angular-error value for pixels where either normal is (near) zero.
inline constexpr float kInvalidAngle = std::numeric_limits<float>::quiet_NaN();

/// Norm below which a normal is treated as background.
inline constexpr double kMinNormalNorm = 1e-6;

/// Tolerance on |gt| - 1 for foreground ground-truth normals.
inline constexpr double kUnitTolerance = 1e-3;

inline const std::vector<double> kDefaultThresholds = {11.25, 22.50};

struct ImageScore {
  std::string image_id;
  double mae_deg = 0.0;
  std::vector<double> accuracy;  // one per threshold
  std::size_t n_pixels = 0;
};

struct EvalReport {
  std::vector<double> thresholds_deg;
  double mae_deg = 0.0;
  std::vector<double> accuracy;  // fraction of pixels below each threshold
  std::size_t n_pixels = 0;
  std::vector<ImageScore> per_image;

  /// Accuracy for a threshold present in thresholds_deg; throws EvaluationError otherwise.
  double accuracy_at(double threshold_deg) const;
  double acc_11_25() const { return accuracy_at(11.25); }
  double acc_22_50() const { return accuracy_at(22.50); }
};

/// Mean of (1 - n . n_hat) over the mask. Predictions are renormalized first.
double cosine_loss(const NormalMap& pred, const NormalMap& gt, const ForegroundMask& mask);

/// Per-pixel angle between n and n_hat in degrees, single channel. Pixels where
/// either vector has norm below kMinNormalNorm hold kInvalidAngle.
Image angular_error_map(const NormalMap& pred, const NormalMap& gt);

/// Scores one image. Thresholds must be strictly increasing.
EvalReport evaluate(const NormalMap& pred, const NormalMap& gt, const ForegroundMask& mask,
                    const std::vector<double>& thresholds_deg = kDefaultThresholds,
                    const std::string& image_id = "image");

enum class Weighting { kImageMean, kPixelWeighted };

/// Combines per-image reports; per_image entries are concatenated in image-id order.
EvalReport aggregate(const std::vector<EvalReport>& reports,
                     Weighting weighting = Weighting::kImageMean);

/// Field name for a threshold: 11.25 -> "acc_11_25".
std::string accuracy_field_name(double threshold_deg);

/// One JSON object per image followed by a summary object, newline separated.
std::string format_report(const EvalReport& report);

}  // namespace polarsfp::metrics
