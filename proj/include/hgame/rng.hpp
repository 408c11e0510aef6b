// Copyright 2026 The hgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HGAME_RNG_HPP_
#define HGAME_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <limits>

// Deterministic, platform-independent randomness. Every random quantity in
// the library is derived from an explicit 64-bit seed, either through the
// sequential Rng stream or through keyed one-shot hashes, so repeated runs
// with the same configuration are bit-identical.

namespace hgame {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline uint64_t splitmix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds one more key into a hash chain.
inline uint64_t hash_mix(uint64_t h, uint64_t v) {
  return splitmix64(h ^ (v * kGolden + 0x517cc1b727220a95ULL));
}

// Maps 64 random bits to a double in [0, 1).
inline double unit_from_bits(uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Keyed one-shot draws: uniform in [0, 1) at integer coordinates.
inline double unit_at(uint64_t key, uint64_t a) {
  return unit_from_bits(hash_mix(key, a));
}
inline double unit_at(uint64_t key, uint64_t a, uint64_t b) {
  return unit_from_bits(hash_mix(hash_mix(key, a), b));
}

// Exponential with the given rate via inverse CDF; rate may be +infinity,
// in which case the draw degenerates to 0.
inline double exponential_from_unit(double u, double rate) {
  if (std::isinf(rate)) return 0.0;
  return -std::log1p(-u) / rate;
}

// Named sub-streams so one experiment seed yields independent randomness
// for the game instance, learner perturbations and the adversary.
enum class Stream : uint64_t {
  kGame = 0x11,
  kSubset = 0x22,
  kMatrix = 0x33,
  kPerturbation = 0x44,
  kAdversary = 0x55,
  kSequence = 0x66,
};

inline uint64_t substream(uint64_t seed, Stream s) {
  return hash_mix(splitmix64(seed), static_cast<uint64_t>(s));
}

// Small sequential generator (splitmix64 stepping).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(splitmix64(seed ^ 0xd1b54a32d192ed03ULL)) {}

  uint64_t next_u64() {
    state_ += kGolden;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return unit_from_bits(next_u64()); }

  // Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                           std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  double next_exponential(double rate) {
    return exponential_from_unit(next_unit(), rate);
  }

 private:
  uint64_t state_;
};

}  // namespace hgame

#endif  // HGAME_RNG_HPP_
