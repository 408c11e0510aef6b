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

#include "hgame/oracles.hpp"

#include <stdexcept>
#include <vector>

#include "hgame/kernels.hpp"
#include "hgame/rng.hpp"

namespace hgame {

double perturbation_at(const PerturbationSpec& p, ActionId i) {
  if (!(p.eta > 0.0)) throw std::invalid_argument("perturbation: eta must be > 0");
  return exponential_from_unit(unit_at(p.seed, static_cast<uint64_t>(i)), p.eta);
}

namespace {

void check_history(const OpponentHistory& h) {
  if (h.actions.size() != h.weights.size()) {
    throw std::invalid_argument("history: actions/weights size mismatch");
  }
  for (double w : h.weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("history: negative weight");
  }
}

}  // namespace

ActionId pure_oracle(const Game& game, const OpponentHistory& h, OracleStats* stats,
                     Exec exec) {
  check_history(h);
  if (h.empty()) throw std::invalid_argument("pure_oracle: empty history");
  std::vector<double> scores(static_cast<size_t>(game.actions()));
  row_score_scan(game, h.actions, h.weights, scores, exec);
  if (stats != nullptr) ++stats->pure_calls;
  return argmax_span(scores, exec).index;
}

ActionId smooth_oracle(const Game& game, const OpponentHistory& h,
                       const PerturbationSpec& p, OracleStats* stats, Exec exec) {
  check_history(h);
  if (!(p.eta > 0.0)) throw std::invalid_argument("smooth_oracle: eta must be > 0");
  const int n = game.actions();
  if (stats != nullptr) ++stats->smooth_calls;
  if (h.empty()) {
    return perturbed_argmax({}, n, p.eta, p.seed, exec).index;
  }
  std::vector<double> scores(static_cast<size_t>(n));
  row_score_scan(game, h.actions, h.weights, scores, exec);
  return perturbed_argmax(scores, n, p.eta, p.seed, exec).index;
}

OpponentHistory weighted_history(std::span<const MixedStrategy> xs,
                                 std::span<const ActionId> js, ActionId i, int t0,
                                 int t1, int n) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument("weighted_history: action out of range");
  }
  if (xs.size() != js.size()) {
    throw std::invalid_argument("weighted_history: rounds size mismatch");
  }
  if (t0 < 0 || t1 >= static_cast<int>(xs.size()) || t0 > t1) {
    throw std::invalid_argument("weighted_history: bad window");
  }
  OpponentHistory h;
  h.t0 = t0;
  h.t1 = t1;
  for (int s = t0; s <= t1; ++s) {
    h.push(js[static_cast<size_t>(s)], xs[static_cast<size_t>(s)].prob_of(i));
  }
  return h;
}

}  // namespace hgame
