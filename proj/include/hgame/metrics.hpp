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

#ifndef HGAME_METRICS_HPP_
#define HGAME_METRICS_HPP_

#include <span>
#include <unordered_map>
#include <vector>

#include "hgame/game.hpp"
#include "hgame/types.hpp"

// Exact regret and equilibrium-gap computation from recorded play. Both a
// stored-trace form (small experiments, tests) and a streaming accumulator
// (long runs) are provided; they agree to floating-point tolerance.

namespace hgame {

struct PlayRound {
  MixedStrategy x;
  GainVector gain;
};
using PlayTrace = std::vector<PlayRound>;

// max_k sum_t gain_t(k) - sum_t x_t . gain_t; may be negative.
double external_regret(const PlayTrace& trace);

// sum over played actions i of max_k sum_t x_t(i) (gain_t(k) - gain_t(i));
// each term is automatically nonnegative because k = i is allowed. Equals
// the maximum over all action-reassignment functions by separability.
double swap_regret(const PlayTrace& trace);

// Streaming equivalents, O(|support| * N) memory.
class RegretAccumulator {
 public:
  explicit RegretAccumulator(int n);

  void observe(const MixedStrategy& x, std::span<const double> gain,
               Exec exec = Exec::kAuto);

  double external(Exec exec = Exec::kAuto) const;
  double swap() const { return swap_sum_; }
  double realized() const { return realized_; }
  int rounds() const { return rounds_; }

 private:
  int n_;
  int rounds_ = 0;
  double realized_ = 0.0;
  double swap_sum_ = 0.0;
  std::vector<double> cum_gain_;
  std::unordered_map<ActionId, std::vector<double>> dev_;   // D(i)(k)
  std::unordered_map<ActionId, double> term_;               // max_k D(i)(k) - D(i)(i)
};

// Empirical joint distribution of play, accumulated as the outer product of
// the two mixed strategies each round (no sampling noise).
class JointEmpirical {
 public:
  JointEmpirical(int n1, int n2);

  void observe(const MixedStrategy& x, const MixedStrategy& y);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int rounds() const { return rounds_; }
  // Normalized mass at (i, j).
  double p(ActionId i, ActionId j) const;
  // Row-player actions carrying positive mass.
  const std::vector<ActionId>& active_rows() const { return active_rows_; }
  const std::vector<ActionId>& active_cols() const { return active_cols_; }

 private:
  int n1_, n2_;
  int rounds_ = 0;
  double total_ = 0.0;
  std::vector<double> mass_;
  std::vector<ActionId> active_rows_, active_cols_;
  std::vector<uint8_t> row_seen_, col_seen_;

  friend double cce_gap(const JointEmpirical&, const Game&, int);
  friend double ce_gap(const JointEmpirical&, const Game&, int, const Game*);
};

// Best fixed-deviation benefit for the given player (1 = rows, 2 = columns),
// floored at 0. Player 2's own payoff defaults to the transpose of `game`.
double cce_gap(const JointEmpirical& joint, const Game& game, int player = 1);

// Best per-recommendation deviation benefit; 0 means the joint distribution
// is a correlated equilibrium for that player. When `player2_game` is given
// it supplies player 2's own payoffs (rows = player 2's actions).
double ce_gap(const JointEmpirical& joint, const Game& game, int player = 1,
              const Game* player2_game = nullptr);

}  // namespace hgame

#endif  // HGAME_METRICS_HPP_
