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

#ifndef HGAME_ORACLES_HPP_
#define HGAME_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hgame/game.hpp"
#include "hgame/types.hpp"

namespace hgame {

// Weighted history of opponent actions over a round window [t0, t1].
struct OpponentHistory {
  std::vector<ActionId> actions;
  std::vector<double> weights;  // nonnegative, aligned with actions
  int t0 = 0;
  int t1 = 0;

  void push(ActionId j, double w) {
    actions.push_back(j);
    weights.push_back(w);
  }
  bool empty() const { return actions.empty(); }
};

// Additive perturbation: coordinate i receives an independent Exp(eta) draw
// keyed by (seed, i), regenerated on demand so no N-vector is ever stored.
struct PerturbationSpec {
  double eta = 1.0;  // > 0; +infinity forces all perturbations to 0
  uint64_t seed = 0;
};

double perturbation_at(const PerturbationSpec& p, ActionId i);

// Unit-cost call accounting, reported separately from wall time.
struct OracleStats {
  uint64_t pure_calls = 0;
  uint64_t smooth_calls = 0;
};

// argmax_i sum_s w_s A(i, j_s), smallest index on ties. History must be
// nonempty. Counts one pure call.
ActionId pure_oracle(const Game& game, const OpponentHistory& h,
                     OracleStats* stats = nullptr, Exec exec = Exec::kAuto);

// argmax_i [sum_s w_s A(i, j_s) + r_i] with r_i per the perturbation spec;
// the history may be empty. Counts one smooth call.
ActionId smooth_oracle(const Game& game, const OpponentHistory& h,
                       const PerturbationSpec& p, OracleStats* stats = nullptr,
                       Exec exec = Exec::kAuto);

// History with entries (j_s, x_s(i)) for rounds s in [t0, t1] (inclusive,
// 0-based): feeding it to pure_oracle realizes the weighted best response
// to action i over that window.
OpponentHistory weighted_history(std::span<const MixedStrategy> xs,
                                 std::span<const ActionId> js, ActionId i,
                                 int t0, int t1, int n);

}  // namespace hgame

#endif  // HGAME_ORACLES_HPP_
