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
#include <random>
#include <string>
#include <string_view>

namespace polarsfp {

/// Deterministic generator keyed by (seed, scene id, stage tag).
///
/// Streams for different scenes or stages never share state, so results do not
/// depend on the order in which scenes are processed.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view scene_id, std::string_view stage = "root");

  /// Independent stream for a named stage of the same scene.
  RandomStream fork(std::string_view stage) const;

  std::uint64_t seed() const noexcept { return seed_; }
  const std::string& scene_id() const noexcept { return scene_id_; }
  const std::string& stage() const noexcept { return stage_; }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi);
  /// Standard normal sample.
  double normal();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::string scene_id_;
  std::string stage_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// 64-bit key mixing used to derive stream states.
std::uint64_t derive_stream_key(std::uint64_t seed, std::string_view scene_id,
                                std::string_view stage) noexcept;

}  // namespace polarsfp
