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

#include "hgame/hidden.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hgame/kernels.hpp"

namespace hgame {

bool SupportSet::contains(ActionId a) const {
  return std::binary_search(actions.begin(), actions.end(), a);
}

void WeightedGainLedger::reset(const std::vector<ActionId>& tracked) {
  tracked_ = tracked;
  rows_.assign(tracked.size(), std::vector<double>(static_cast<size_t>(n_), 0.0));
}

int WeightedGainLedger::row_index(ActionId i) const {
  auto it = std::lower_bound(tracked_.begin(), tracked_.end(), i);
  if (it == tracked_.end() || *it != i) return -1;
  return static_cast<int>(it - tracked_.begin());
}

void WeightedGainLedger::accumulate(const MixedStrategy& x,
                                    std::span<const double> gain, Exec exec) {
  if (gain.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("ledger: gain dimension mismatch");
  }
  for (size_t k = 0; k < tracked_.size(); ++k) {
    const double w = x.prob_of(tracked_[k]);
    if (w == 0.0) continue;
    vec_add_scaled(rows_[k], gain, w, exec);
  }
}

ActionId WeightedGainLedger::weighted_br(ActionId i, Exec exec) const {
  const int row = row_index(i);
  if (row < 0) throw std::invalid_argument("ledger: action not tracked");
  return argmax_span(rows_[static_cast<size_t>(row)], exec).index;
}

std::span<const double> WeightedGainLedger::vector_of(ActionId i) const {
  const int row = row_index(i);
  if (row < 0) throw std::invalid_argument("ledger: action not tracked");
  return rows_[static_cast<size_t>(row)];
}

SupportSet expand(const SupportSet& s, const WeightedGainLedger& ledger, int t,
                  OracleStats* stats, Exec exec) {
  std::set<ActionId> members(s.actions.begin(), s.actions.end());
  for (ActionId i : s.actions) {
    members.insert(ledger.weighted_br(i, exec));
    if (stats != nullptr) ++stats->pure_calls;
  }
  SupportSet out;
  out.actions.assign(members.begin(), members.end());
  if (out.actions == s.actions) {
    out.epoch_start = s.epoch_start;
    out.epoch = s.epoch;
  } else {
    out.epoch_start = t;
    out.epoch = s.epoch + 1;
  }
  return out;
}

namespace {

// One pure-oracle probe against an arbitrary opponent column. For a hidden
// game the dominance margin puts the result inside the dominant set, which
// keeps the support contained in it from the very first round.
ActionId bootstrap_action(const Game* game, OracleStats* stats) {
  if (game == nullptr) return 0;
  OpponentHistory h;
  h.push(0, 1.0);
  return pure_oracle(*game, h, stats);
}

}  // namespace

Algo1Runner::Algo1Runner(const Game* game, int n, int horizon, double gain_max)
    : game_(game),
      n_(n),
      horizon_(horizon),
      cap_(expansion_cap(horizon)),
      gain_max_(gain_max),
      ledger_(n),
      bm_(make_bm(1, horizon)) {
  if (horizon < 1) throw std::invalid_argument("runner: horizon must be >= 1");
  if (n < 1) throw std::invalid_argument("runner: n must be >= 1");
  if (!(gain_max > 0.0)) throw std::invalid_argument("runner: bad gain_max");
  support_.actions = {bootstrap_action(game_, &stats_.oracle)};
  support_.epoch_start = 1;
  support_.epoch = 0;
  ledger_.reset(support_.actions);
  warm_.clear();
}

void Algo1Runner::restart(int t) {
  bm_ = make_bm(support_.size(), horizon_);
  ledger_.reset(support_.actions);
  support_.epoch_start = t;
  warm_.clear();
}

MixedStrategy Algo1Runner::round(std::span<const double> gain, int t) {
  if (gain.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("runner: gain dimension mismatch");
  }
  stats_.restarted = false;

  if (t > 1 && t <= cap_) {
    SupportSet grown = expand(support_, ledger_, t, &stats_.oracle);
    if (grown.actions != support_.actions) {
      support_ = std::move(grown);
      restart(t);
      stats_.restarted = true;
    }
  }

  BmPlay play = bm_strategy(bm_, kBmEps, warm_);
  warm_ = play.x.probs;
  stats_.residual = play.residual;
  stats_.support_size = support_.size();
  stats_.epoch = support_.epoch;

  // Map the subroutine's local distribution onto global action ids.
  MixedStrategy x;
  x.support = support_.actions;
  x.probs = play.x.probs;

  std::vector<double> restricted(support_.actions.size());
  for (size_t k = 0; k < support_.actions.size(); ++k) {
    restricted[k] = gain[static_cast<size_t>(support_.actions[k])];
  }
  bm_update(bm_, play.x, restricted, gain_max_);
  if (t < cap_) ledger_.accumulate(x, gain);
  return x;
}

}  // namespace hgame
