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

#include "polarsfp/random.hpp"

namespace polarsfp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_stream_key(std::uint64_t seed, std::string_view scene_id,
                                std::string_view stage) noexcept {
  std::uint64_t k = splitmix64(seed);
  k = splitmix64(k ^ fnv1a(scene_id));
  k = splitmix64(k ^ fnv1a(stage));
  return k;
}

RandomStream::RandomStream(std::uint64_t seed, std::string_view scene_id, std::string_view stage)
    : seed_(seed), scene_id_(scene_id), stage_(stage),
      engine_(derive_stream_key(seed, scene_id, stage)) {}

RandomStream RandomStream::fork(std::string_view stage) const {
  return RandomStream(seed_, scene_id_, stage_ + "/" + std::string(stage));
}

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

double RandomStream::uniform(double lo, double hi) {
  if (lo == hi) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomStream::normal() { return normal_(engine_); }

}  // namespace polarsfp
