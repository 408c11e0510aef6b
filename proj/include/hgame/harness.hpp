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

#ifndef HGAME_HARNESS_HPP_
#define HGAME_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgame/game.hpp"
#include "hgame/metrics.hpp"
#include "hgame/types.hpp"

// Experiment runner: algorithms x adversaries over seeded instances, with
// per-round CSV traces and a JSON summary. Seeds run in parallel; each run
// is internally deterministic, so repeated invocations produce byte-
// identical output.

namespace hgame {

enum class Algorithm { kHedge, kFpl, kBm, kAlgo1, kCombined };
enum class AdversaryKind { kFixedMixed, kAdaptiveBr, kSelfPlay, kIidRandom };

std::string to_string(Algorithm a);
std::string to_string(AdversaryKind a);
Algorithm algorithm_from_string(const std::string& s);
AdversaryKind adversary_from_string(const std::string& s);

// Raised for unusable configurations (CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::optional<Game> game;    // required unless the adversary is iid_random
  std::optional<Game> game2;   // self-play player 2; transpose of game when absent
  Algorithm algorithm = Algorithm::kHedge;
  AdversaryKind adversary = AdversaryKind::kFixedMixed;
  int horizon = 0;
  std::vector<uint64_t> seeds;
  int n_sequence = 0;               // action count for gameless runs
  std::string out;                  // output prefix; empty writes nothing
  std::vector<int> gap_checkpoints; // self-play equilibrium-gap rounds

  int action_count() const;
  void validate() const;  // throws ConfigError

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig load(const std::string& path);
};

struct RunSummary {
  uint64_t seed = 0;
  double external_regret = 0.0;
  double swap_regret = 0.0;
  double realized_gain = 0.0;
  uint64_t oracle_calls = 0;
  // Self-play only: per-checkpoint correlated-equilibrium gaps.
  std::vector<double> ce_gap_p1, ce_gap_p2;
  double cce_gap_p1 = std::nan("");
  double final_residual_sum = 0.0;
};

struct RunResult {
  RunSummary summary;
  std::string csv;  // full per-round trace including header
};

// One deterministic run. Any OpenMP parallelism inside the round kernels
// never changes results.
RunResult run_single(const ExperimentConfig& config, uint64_t seed);

struct ExperimentResult {
  std::vector<RunResult> runs;     // in seed order
  std::string summary_json;
};

// Runs every configured seed (in parallel), optionally writing
// <out>.seed<k>.csv per seed plus <out>.summary.json.
ExperimentResult run(const ExperimentConfig& config);

// -- Adversaries --------------------------------------------------------
// Exposed so verification code can drive custom round loops.

class FixedMixedAdversary {
 public:
  FixedMixedAdversary(const Game& game, uint64_t seed);
  const MixedStrategy& strategy() const { return y_; }
  const GainVector& gain() const { return gain_; }  // constant across rounds

 private:
  MixedStrategy y_;
  GainVector gain_;
};

// Plays the pure column minimizing the learner's expected gain against the
// learner's previous strategy (uniform before the first round).
class AdaptiveBrAdversary {
 public:
  explicit AdaptiveBrAdversary(const Game& game);
  ActionId respond(const MixedStrategy& prev_x);
  GainVector gain(ActionId column, Exec exec = Exec::kAuto) const;

 private:
  const Game& game_;
};

// Fresh i.i.d. uniform [0,1) gain vectors each round, no game matrix.
class IidRandomAdversary {
 public:
  IidRandomAdversary(int n, uint64_t seed);
  GainVector gain(int t) const;

 private:
  int n_;
  uint64_t key_;
};

}  // namespace hgame

#endif  // HGAME_HARNESS_HPP_
