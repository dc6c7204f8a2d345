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

#include "polarsfp/image.hpp"

#include <algorithm>
#include <cmath>

#include "polarsfp/error.hpp"

namespace polarsfp {

Image::Image(int height, int width, int channels, float fill) {
  if (height < 0 || width < 0 || channels < 0) {
    throw ParameterError("negative image dimension");
  }
  height_ = height;
  width_ = width;
  channels_ = channels;
  data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
}

bool Image::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](float v) { return std::isfinite(v); });
}

std::string Image::shape_string() const {
  return std::to_string(height_) + "x" + std::to_string(width_) + "x" +
         std::to_string(channels_);
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (!a.same_shape(b)) {
    throw StructuralError(std::string(what) + ": shape mismatch (" +
                          a.shape_string() + " vs " + b.shape_string() + ")");
  }
}

void QuadPolarImage::check() const {
  require_same_shape(i0, i45, "quad image I45");
  require_same_shape(i0, i90, "quad image I90");
  require_same_shape(i0, i135, "quad image I135");
  if (i0.channels() < 1) throw StructuralError("quad image has no channels");
}

void StokesImage::check() const {
  require_same_shape(s0, s1, "Stokes image s1");
  require_same_shape(s0, s2, "Stokes image s2");
  if (s0.channels() < 1) throw StructuralError("Stokes image has no channels");
}

NormalMap::NormalMap(Image m) : map(std::move(m)) {
  if (map.channels() != 3) {
    throw StructuralError("normal map needs 3 channels, got " +
                          std::to_string(map.channels()));
  }
}

std::size_t ForegroundMask::count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }));
}

}  // namespace polarsfp
