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

#ifndef HGAME_TYPES_HPP_
#define HGAME_TYPES_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hgame {

// Index of a pure action in [0, N).
using ActionId = int32_t;

// Per-round payoff vector; entry i is the gain of pure action i.
using GainVector = std::vector<double>;

inline constexpr double kDistributionTol = 1e-9;

// A probability distribution over actions, stored sparsely over a strictly
// increasing support. Dense distributions simply use the full support.
struct MixedStrategy {
  std::vector<ActionId> support;
  std::vector<double> probs;

  // Probability of action a (0 when outside the support).
  double prob_of(ActionId a) const {
    auto it = std::lower_bound(support.begin(), support.end(), a);
    if (it == support.end() || *it != a) return 0.0;
    return probs[static_cast<size_t>(it - support.begin())];
  }

  double dot(std::span<const double> dense) const {
    double v = 0.0;
    for (size_t k = 0; k < support.size(); ++k) {
      v += probs[k] * dense[static_cast<size_t>(support[k])];
    }
    return v;
  }

  std::vector<double> to_dense(int n) const {
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (size_t k = 0; k < support.size(); ++k) {
      out[static_cast<size_t>(support[k])] = probs[k];
    }
    return out;
  }

  // Throws std::invalid_argument when the invariants do not hold.
  void validate() const {
    if (support.size() != probs.size()) {
      throw std::invalid_argument("mixed strategy: support/probs size mismatch");
    }
    double sum = 0.0;
    for (size_t k = 0; k < support.size(); ++k) {
      if (k > 0 && support[k] <= support[k - 1]) {
        throw std::invalid_argument("mixed strategy: support not strictly increasing");
      }
      if (!(probs[k] >= 0.0)) {
        throw std::invalid_argument("mixed strategy: negative probability");
      }
      sum += probs[k];
    }
    if (sum < 1.0 - kDistributionTol || sum > 1.0 + kDistributionTol) {
      throw std::invalid_argument("mixed strategy: mass not 1");
    }
  }
};

inline MixedStrategy pure_strategy(ActionId a) {
  return MixedStrategy{{a}, {1.0}};
}

inline MixedStrategy uniform_strategy(int n) {
  MixedStrategy s;
  s.support.resize(static_cast<size_t>(n));
  s.probs.assign(static_cast<size_t>(n), 1.0 / n);
  for (int i = 0; i < n; ++i) s.support[static_cast<size_t>(i)] = i;
  return s;
}

}  // namespace hgame

#endif  // HGAME_TYPES_HPP_
