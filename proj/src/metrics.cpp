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

#include "polarsfp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "polarsfp/error.hpp"

namespace polarsfp::metrics {

namespace {

struct Vec3 {
  double x, y, z;
};

Vec3 load(const NormalMap& n, int r, int c) {
  return {n.map.at(r, c, 0), n.map.at(r, c, 1), n.map.at(r, c, 2)};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// atan2(|a x b|, a . b) equals arccos of the clamped normalized dot product but
// stays accurate near 0 and 180 degrees.
double angle_deg(const Vec3& a, const Vec3& b) {
  const Vec3 cr{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  return std::atan2(norm(cr), dot(a, b)) * 180.0 / std::numbers::pi;
}

void check_shapes(const NormalMap& pred, const NormalMap& gt) {
  if (pred.map.channels() != 3 || gt.map.channels() != 3) {
    throw StructuralError("normal maps need 3 channels");
  }
  require_same_shape(pred.map, gt.map, "predicted normal map");
}

void check_mask(const NormalMap& gt, const ForegroundMask& mask) {
  if (mask.height() != gt.height() || mask.width() != gt.width()) {
    throw StructuralError("mask " + std::to_string(mask.height()) + "x" +
                          std::to_string(mask.width()) + " does not match normal map " +
                          gt.map.shape_string());
  }
  if (mask.count() == 0) throw EvaluationError("foreground mask is empty");
}

void check_thresholds(const std::vector<double>& t) {
  if (t.empty()) throw ParameterError("at least one accuracy threshold is required");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw ParameterError("thresholds must be strictly increasing");
  }
}

}  // namespace

double EvalReport::accuracy_at(double threshold_deg) const {
  for (std::size_t i = 0; i < thresholds_deg.size(); ++i) {
    if (std::abs(thresholds_deg[i] - threshold_deg) < 1e-9) return accuracy.at(i);
  }
  throw EvaluationError("report has no accuracy for threshold " + std::to_string(threshold_deg));
}

double cosine_loss(const NormalMap& pred, const NormalMap& gt, const ForegroundMask& mask) {
  check_shapes(pred, gt);
  check_mask(gt, mask);
  double total = 0.0;
  std::size_t n = 0;
  for (int r = 0; r < gt.height(); ++r) {
    for (int c = 0; c < gt.width(); ++c) {
      if (!mask(r, c)) continue;
      Vec3 p = load(pred, r, c);
      const double len = norm(p);
      if (len > kMinNormalNorm) p = {p.x / len, p.y / len, p.z / len};
      total += 1.0 - dot(p, load(gt, r, c));
      ++n;
    }
  }
  return total / static_cast<double>(n);
}

Image angular_error_map(const NormalMap& pred, const NormalMap& gt) {
  check_shapes(pred, gt);
  Image out(gt.height(), gt.width(), 1);
  for (int r = 0; r < gt.height(); ++r) {
    for (int c = 0; c < gt.width(); ++c) {
      const Vec3 p = load(pred, r, c);
      const Vec3 g = load(gt, r, c);
      out.at(r, c) = (norm(p) < kMinNormalNorm || norm(g) < kMinNormalNorm)
                         ? kInvalidAngle
                         : static_cast<float>(angle_deg(p, g));
    }
  }
  return out;
}

EvalReport evaluate(const NormalMap& pred, const NormalMap& gt, const ForegroundMask& mask,
                    const std::vector<double>& thresholds_deg, const std::string& image_id) {
  check_thresholds(thresholds_deg);
  check_shapes(pred, gt);
  check_mask(gt, mask);

  double sum = 0.0;
  std::size_t n = 0;
  std::vector<std::size_t> below(thresholds_deg.size(), 0);
  for (int r = 0; r < gt.height(); ++r) {
    for (int c = 0; c < gt.width(); ++c) {
      if (!mask(r, c)) continue;
      const Vec3 p = load(pred, r, c);
      const Vec3 g = load(gt, r, c);
      const double gn = norm(g);
      if (gn < kMinNormalNorm) continue;
      if (std::abs(gn - 1.0) > kUnitTolerance) {
        throw EvaluationError("ground-truth normal at (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") is not unit length");
      }
      if (norm(p) < kMinNormalNorm) continue;
      // Evaluate in double; the float error map is for display.
      const double e = angle_deg(p, g);
      sum += e;
      ++n;
      for (std::size_t t = 0; t < thresholds_deg.size(); ++t) below[t] += (e < thresholds_deg[t]);
    }
  }
  if (n == 0) throw EvaluationError("no valid foreground pixels in " + image_id);

  EvalReport rep;
  rep.thresholds_deg = thresholds_deg;
  rep.mae_deg = sum / static_cast<double>(n);
  rep.n_pixels = n;
  for (std::size_t b : below) rep.accuracy.push_back(static_cast<double>(b) / n);
  rep.per_image.push_back(ImageScore{image_id, rep.mae_deg, rep.accuracy, n});
  return rep;
}

EvalReport aggregate(const std::vector<EvalReport>& reports, Weighting weighting) {
  if (reports.empty()) throw EvaluationError("cannot aggregate an empty report list");
  EvalReport out;
  out.thresholds_deg = reports.front().thresholds_deg;
  for (const auto& r : reports) {
    if (r.thresholds_deg != out.thresholds_deg) {
      throw EvaluationError("reports use different accuracy thresholds");
    }
    out.per_image.insert(out.per_image.end(), r.per_image.begin(), r.per_image.end());
  }
  std::stable_sort(out.per_image.begin(), out.per_image.end(),
                   [](const ImageScore& a, const ImageScore& b) { return a.image_id < b.image_id; });

  double wsum = 0.0;
  double mae = 0.0;
  std::vector<double> acc(out.thresholds_deg.size(), 0.0);
  for (const auto& img : out.per_image) {
    const double w = weighting == Weighting::kPixelWeighted ? static_cast<double>(img.n_pixels) : 1.0;
    wsum += w;
    mae += w * img.mae_deg;
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += w * img.accuracy.at(t);
    out.n_pixels += img.n_pixels;
  }
  if (wsum == 0.0) throw EvaluationError("aggregate has zero total weight");
  out.mae_deg = mae / wsum;
  for (double& a : acc) a /= wsum;
  out.accuracy = std::move(acc);
  return out;
}

std::string accuracy_field_name(double threshold_deg) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "acc_%.2f", threshold_deg);
  std::string s(buf);
  std::replace(s.begin(), s.end(), '.', '_');
  return s;
}

std::string format_report(const EvalReport& report) {
  auto fill = [&](nlohmann::ordered_json& j, double mae, const std::vector<double>& acc,
                  std::size_t n) {
    j["mae_deg"] = mae;
    for (std::size_t t = 0; t < report.thresholds_deg.size(); ++t) {
      j[accuracy_field_name(report.thresholds_deg[t])] = acc.at(t);
    }
    j["n_pixels"] = n;
  };
  std::string out;
  for (const auto& img : report.per_image) {
    nlohmann::ordered_json j;
    j["record"] = "image";
    j["image_id"] = img.image_id;
    fill(j, img.mae_deg, img.accuracy, img.n_pixels);
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json s;
  s["record"] = "summary";
  s["images"] = report.per_image.size();
  fill(s, report.mae_deg, report.accuracy, report.n_pixels);
  out += s.dump() + "\n";
  return out;
}

}  // namespace polarsfp::metrics
