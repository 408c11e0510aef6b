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

#ifndef HGAME_LEARNERS_HPP_
#define HGAME_LEARNERS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hgame/oracles.hpp"
#include "hgame/types.hpp"

// External-regret learners over gain sequences in [0,1]. Callers rescale
// game gains by the global maximum before feeding them in.

namespace hgame {

// Multiplicative weights: plays softmax(eta * cumulative gains).
struct HedgeState {
  int dim = 0;
  double eta = 0.0;
  std::vector<double> cum;
};

// Fixed-horizon step size eta = sqrt(8 ln(dim) / T).
HedgeState make_hedge(int dim, int horizon);
HedgeState make_hedge_eta(int dim, double eta);

// softmax(eta * cum), stabilized by subtracting the max exponent.
MixedStrategy hedge_distribution(const HedgeState& s);

// cum += g; g must have dimension dim with entries in [0,1].
void hedge_update(HedgeState& s, std::span<const double> g);

// Follow-the-perturbed-leader over [0, n). The perturbation is drawn once
// at initialization and reused every round; each selection costs exactly
// one smooth-oracle call.
struct FplState {
  int n = 0;
  int horizon = 0;
  PerturbationSpec perturbation;
  std::vector<double> cum;   // cumulative gains
  uint64_t calls = 0;        // smooth-oracle calls made so far
};

// eta = sqrt(ln(n) / T); requires n >= 2, T >= 1.
FplState fpl_init(int n, int horizon, uint64_t seed);

ActionId fpl_select(FplState& s, OracleStats* stats = nullptr, Exec exec = Exec::kAuto);

void fpl_update(FplState& s, std::span<const double> g, Exec exec = Exec::kAuto);

}  // namespace hgame

#endif  // HGAME_LEARNERS_HPP_
