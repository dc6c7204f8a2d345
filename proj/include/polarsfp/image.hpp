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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polarsfp {

/// Dense float image, row-major with interleaved channels (row 0 is the top row).
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels, float fill = 0.0f);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  float& at(int row, int col, int ch = 0) noexcept {
    return data_[index(row, col, ch)];
  }
  float at(int row, int col, int ch = 0) const noexcept {
    return data_[index(row, col, ch)];
  }

  std::span<float> values() noexcept { return data_; }
  std::span<const float> values() const noexcept { return data_; }
  float* data() noexcept { return data_.data(); }
  const float* data() const noexcept { return data_.data(); }

  bool same_shape(const Image& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  bool all_finite() const noexcept;
  std::string shape_string() const;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int row, int col, int ch) const noexcept {
    return (static_cast<std::size_t>(row) * width_ + col) * channels_ + ch;
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

/// Throws StructuralError unless a and b share height, width and channel count.
void require_same_shape(const Image& a, const Image& b, const char* what);

/// Four linearly polarized intensity planes in linear radiance, nominal full scale [0, 1].
struct QuadPolarImage {
  Image i0;
  Image i45;
  Image i90;
  Image i135;

  int height() const noexcept { return i0.height(); }
  int width() const noexcept { return i0.width(); }
  int channels() const noexcept { return i0.channels(); }

  /// Throws StructuralError if the planes disagree in shape or have no channels.
  void check() const;
};

/// Linear Stokes planes (s0, s1, s2).
struct StokesImage {
  Image s0;
  Image s1;
  Image s2;

  int height() const noexcept { return s0.height(); }
  int width() const noexcept { return s0.width(); }
  int channels() const noexcept { return s0.channels(); }

  void check() const;
};

/// Degree of linear polarization, values in [0, 1].
struct DolpMap {
  Image map;
};

/// Angle of linear polarization in radians, values in (-pi/2, pi/2].
struct AolpMap {
  Image map;
};

/// Per-pixel 3-vectors in camera space (+z toward the camera). Background is (0, 0, 0).
struct NormalMap {
  Image map;  // channels() == 3

  NormalMap() = default;
  explicit NormalMap(Image m);
  NormalMap(int height, int width) : map(height, width, 3) {}

  int height() const noexcept { return map.height(); }
  int width() const noexcept { return map.width(); }
};

/// Binary evaluation region.
class ForegroundMask {
 public:
  ForegroundMask() = default;
  ForegroundMask(int height, int width, bool fill = false)
      : height_(height), width_(width),
        bits_(static_cast<std::size_t>(height) * width, fill ? 1 : 0) {}

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }

  bool operator()(int row, int col) const noexcept {
    return bits_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  void set(int row, int col, bool v) noexcept {
    bits_[static_cast<std::size_t>(row) * width_ + col] = v ? 1 : 0;
  }

  std::size_t count() const noexcept;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const ForegroundMask&, const ForegroundMask&) = default;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace polarsfp
