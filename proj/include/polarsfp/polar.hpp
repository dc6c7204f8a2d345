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
#include <numbers>

#include "polarsfp/image.hpp"

namespace polarsfp {

/// pi/2 rounded to float. AoLP values are checked against (-kHalfPiF, kHalfPiF].
inline constexpr float kHalfPiF = static_cast<float>(std::numbers::pi / 2.0);

/// Default guard for s0 in the DoLP division, as a fraction of full scale.
inline constexpr float kDefaultDolpEpsilon = 1e-6f;

/// Whether polarization cues are computed per color channel or on luminance.
enum class CueChannels { kPerChannel, kLuminance };

/// s0 = (I0 + I45 + I90 + I135) / 2, s1 = I0 - I90, s2 = I45 - I135.
StokesImage quad_to_stokes(const QuadPolarImage& q);

/// Ideal-polarizer inverse: I_phi = (s0 + s1 cos 2phi + s2 sin 2phi) / 2. No clamping.
QuadPolarImage stokes_to_quad(const StokesImage& s);

/// sqrt(s1^2 + s2^2) / max(s0, epsilon), clamped to [0, 1].
DolpMap stokes_to_dolp(const StokesImage& s, float epsilon = kDefaultDolpEpsilon,
                       CueChannels mode = CueChannels::kPerChannel);

/// atan2(s2, s1) / 2 wrapped into (-pi/2, pi/2]; 0 where s1 = s2 = 0.
AolpMap stokes_to_aolp(const StokesImage& s, CueChannels mode = CueChannels::kPerChannel);

/// Collapses an RGB Stokes image to one channel with Rec. 709 luma weights.
/// Single-channel input is returned unchanged.
StokesImage luminance(const StokesImage& s);

/// Maps any angle to the AoLP range (-pi/2, pi/2] (angles are defined modulo pi).
float wrap_aolp(double angle) noexcept;

/// Scalar kernels shared by the image routines and the Python bindings.
float dolp_value(float s0, float s1, float s2, float epsilon = kDefaultDolpEpsilon) noexcept;
float aolp_value(float s1, float s2) noexcept;

struct StokesValidity {
  std::size_t samples = 0;         // pixels x channels examined
  std::size_t negative_s0 = 0;     // s0 < 0
  std::size_t over_polarized = 0;  // sqrt(s1^2 + s2^2) > s0 (1 + 1e-6)
  std::size_t invalid = 0;         // either of the above

  double negative_fraction() const noexcept {
    return samples ? static_cast<double>(negative_s0) / samples : 0.0;
  }
  double over_polarized_fraction() const noexcept {
    return samples ? static_cast<double>(over_polarized) / samples : 0.0;
  }
  std::size_t violations() const noexcept { return invalid; }
};

/// Counts physically invalid samples. Never modifies or rejects the input.
StokesValidity validate_stokes(const StokesImage& s);

}  // namespace polarsfp
