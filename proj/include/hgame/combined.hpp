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

#ifndef HGAME_COMBINED_HPP_
#define HGAME_COMBINED_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hgame/hidden.hpp"
#include "hgame/learners.hpp"
#include "hgame/swap.hpp"

// Simultaneous external- and swap-regret minimization: a two-way master
// Hedge arbitrates between a perturbed-leader learner over the full action
// space and per-action Hedge copies over the discovered support; play is an
// approximate fixed point of the blended row-stochastic matrix, computed on
// the reduced index space of the support plus the leader's action.

namespace hgame {

// All rows equal to the unit row of the given reduced index.
RowStochasticMatrix build_p(int leader_index, int dim);

// Row s = distribution of copy s scattered to the support's reduced
// positions. When the leader's action lies outside the support its row is a
// self-loop, which keeps the matrix row-stochastic on the reduced space
// without moving any support mass.
RowStochasticMatrix build_q_tilde(const std::vector<std::vector<double>>& copy_rows,
                                  std::span<const int> support_positions,
                                  int leader_index, int dim);

// beta1 * P + beta2 * Q.
RowStochasticMatrix combine(double beta1, double beta2,
                            const RowStochasticMatrix& p,
                            const RowStochasticMatrix& q);

// Test hooks: forcing the master weights and/or the fixed-point accuracy.
struct CombinedOptions {
  std::optional<std::array<double, 2>> forced_beta;
  std::optional<double> fixed_point_eps;
  std::optional<double> forced_perturbation_eta;  // e.g. +inf for no noise
};

class CombinedRunner {
 public:
  // `game` may be null for raw gain sequences (support then starts at 0).
  CombinedRunner(const Game* game, int n, int horizon, uint64_t seed,
                 double gain_max, CombinedOptions options = {});

  // Plays round t (1-based): expansion/restart of the copies, assembly of
  // the blended matrix, approximate fixed point at accuracy 1/sqrt(t),
  // then all updates against the observed gain.
  MixedStrategy round(std::span<const double> gain, int t);

  const SupportSet& support() const { return support_; }
  const RoundStats& stats() const { return stats_; }

 private:
  void restart_copies(int t);

  const Game* game_;
  int n_;
  int horizon_;
  int cap_;
  double gain_max_;
  CombinedOptions options_;

  HedgeState master_;
  std::vector<HedgeState> copies_;
  FplState fpl_;
  SupportSet support_;
  WeightedGainLedger ledger_;
  RoundStats stats_;
};

}  // namespace hgame

#endif  // HGAME_COMBINED_HPP_
