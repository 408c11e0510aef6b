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

#ifndef HGAME_HIDDEN_HPP_
#define HGAME_HIDDEN_HPP_

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "hgame/game.hpp"
#include "hgame/oracles.hpp"
#include "hgame/swap.hpp"
#include "hgame/types.hpp"

// Incremental discovery of a dominant action subset: a growing support set
// expanded by weighted best responses during the first ceil(log2 T) rounds,
// with the swap-regret subroutine restarted on every expansion.

namespace hgame {

struct SupportSet {
  std::vector<ActionId> actions;  // strictly increasing, nonempty
  int epoch_start = 1;            // first round of the current epoch (1-based)
  int epoch = 0;

  bool contains(ActionId a) const;
  int size() const { return static_cast<int>(actions.size()); }
};

// Rounds eligible for expansion: 1 < t <= ceil(log2 T).
inline int expansion_cap(int horizon) {
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(horizon))));
}

// Cumulative play-weighted gain vectors L(i) = sum_t x_t(i) * gain_t over
// the current epoch window, one full-length vector per tracked action.
class WeightedGainLedger {
 public:
  explicit WeightedGainLedger(int n) : n_(n) {}

  // Starts a fresh window tracking exactly `tracked` (sorted).
  void reset(const std::vector<ActionId>& tracked);

  void accumulate(const MixedStrategy& x, std::span<const double> gain,
                  Exec exec = Exec::kAuto);

  // argmax_j L(i)(j), smallest index on ties; throws when i is untracked.
  ActionId weighted_br(ActionId i, Exec exec = Exec::kAuto) const;

  std::span<const double> vector_of(ActionId i) const;
  const std::vector<ActionId>& tracked() const { return tracked_; }
  int n() const { return n_; }

 private:
  int row_index(ActionId i) const;  // -1 when untracked

  int n_;
  std::vector<ActionId> tracked_;
  std::vector<std::vector<double>> rows_;
};

// S union {weighted best response to each member}. When the set grows the
// returned epoch starts at t; the caller must restart its swap subroutine
// and reset the ledger. Each best response counts one pure-oracle call.
SupportSet expand(const SupportSet& s, const WeightedGainLedger& ledger, int t,
                  OracleStats* stats = nullptr, Exec exec = Exec::kAuto);

// Per-round diagnostics shared by the sequential runners.
struct RoundStats {
  int support_size = -1;
  int epoch = -1;
  bool restarted = false;
  double residual = std::nan("");
  double beta1 = std::nan("");
  double beta2 = std::nan("");
  double v1 = std::nan("");
  double v2 = std::nan("");
  ActionId leader_choice = -1;
  OracleStats oracle;
};

// Full sequential runner: hidden-set tracking around a swap-regret
// subroutine restricted to the current support. When a game is supplied the
// initial support comes from one pure-oracle probe (guaranteeing it lies in
// the dominant set of a hidden game); otherwise it is action 0.
class Algo1Runner {
 public:
  Algo1Runner(const Game* game, int n, int horizon, double gain_max);

  // Plays round t (1-based) against the given gain vector: expansion check,
  // optional restart, play from the subroutine over the support, updates.
  MixedStrategy round(std::span<const double> gain, int t);

  const SupportSet& support() const { return support_; }
  const WeightedGainLedger& ledger() const { return ledger_; }
  const RoundStats& stats() const { return stats_; }

 private:
  void restart(int t);

  const Game* game_;
  int n_;
  int horizon_;
  int cap_;
  double gain_max_;
  SupportSet support_;
  WeightedGainLedger ledger_;
  BmState bm_;
  std::vector<double> warm_;
  RoundStats stats_;
};

}  // namespace hgame

#endif  // HGAME_HIDDEN_HPP_
