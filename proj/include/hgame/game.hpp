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

#ifndef HGAME_GAME_HPP_
#define HGAME_GAME_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hgame/rng.hpp"
#include "hgame/types.hpp"

namespace hgame {

// Execution policy for the data-parallel kernels. kAuto picks the parallel
// path for large scans and the serial one below the cutover size.
enum class Exec { kSerial, kParallel, kAuto };

// Largest action count for which the base-matrix entries are materialized;
// beyond it they are generated on demand from the seed.
inline constexpr int kDenseBaseLimit = 4096;

// Two-player payoff structure A(i,j) = 1[i in R] + rho * A1(i,j) where R is
// a planted subset of the row player's actions that dominates the rest by a
// margin of 1 - rho, uniformly over the opponent's play. Entries of A1 lie
// in [0,1], so payoffs lie in [0,2].
struct HiddenGameSpec {
  int n = 0;
  std::vector<ActionId> r_set;   // sorted members of R
  std::vector<uint8_t> in_r;     // n-length membership mask
  double rho = 0.0;
  int role = 1;                  // which player owns the hidden structure

  // Generator parameters; set when built by make_hidden_game, in which case
  // the instance is reproducible (and serializable) from them alone.
  bool generated = false;
  int r_count = 0;
  uint64_t seed = 0;

  uint64_t base_key = 0;            // hash key for on-demand A1 entries
  std::vector<double> base_dense;   // n*n row-major cache, may be empty

  double base_at(ActionId i, ActionId j) const {
    if (!base_dense.empty()) {
      return base_dense[static_cast<size_t>(i) * static_cast<size_t>(n) +
                        static_cast<size_t>(j)];
    }
    return unit_at(base_key, static_cast<uint64_t>(i), static_cast<uint64_t>(j));
  }

  double payoff(ActionId i, ActionId j) const {
    return (in_r[static_cast<size_t>(i)] ? 1.0 : 0.0) + rho * base_at(i, j);
  }

  bool in_hidden_set(ActionId i) const { return in_r[static_cast<size_t>(i)] != 0; }
};

// Deterministically generates an instance: R is a uniformly random r-subset
// and A1 entries are i.i.d. uniform [0,1), all derived from the seed.
HiddenGameSpec make_hidden_game(int n, int r, double rho, uint64_t seed, int role = 1);

// Builds an instance from explicit parts (used by tests and hand-made games).
HiddenGameSpec hidden_game_from_parts(int n, std::vector<ActionId> r_set, double rho,
                                      std::vector<double> base_dense, int role = 1);

// Explicit payoff matrix; row = own action, column = opponent action.
struct GameMatrix {
  int n = 0;
  std::vector<double> entries;  // n*n row-major
  double lo = 0.0;
  double hi = 0.0;

  double payoff(ActionId i, ActionId j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(n) +
                   static_cast<size_t>(j)];
  }
};

GameMatrix game_from_entries(int n, std::vector<double> entries);

// Random matrix with i.i.d. uniform [0,1) entries under the seed.
GameMatrix make_random_game(int n, uint64_t seed);

// Value-semantic wrapper over the two payoff representations. Instances are
// immutable after construction and safe to share across threads.
class Game {
 public:
  explicit Game(HiddenGameSpec g);
  explicit Game(GameMatrix g);

  int actions() const;
  double payoff(ActionId i, ActionId j) const;

  // Upper bound on gain magnitudes: 2 for hidden games, max entry otherwise.
  double gain_max() const;

  const HiddenGameSpec* hidden() const { return std::get_if<HiddenGameSpec>(&rep_); }
  const GameMatrix* matrix() const { return std::get_if<GameMatrix>(&rep_); }

  // JSON forms: {"n","r","rho","seed","role"} for generated hidden games
  // (round-trips bit-exactly) or {"n","entries"} for explicit matrices.
  std::string to_json() const;
  static Game from_json(const std::string& text);
  static Game load(const std::string& path);

 private:
  std::variant<HiddenGameSpec, GameMatrix> rep_;
};

// Gain vector against an opponent mixed strategy: out[i] = sum_j A(i,j) y(j).
GainVector gain_vector(const Game& game, const MixedStrategy& y, Exec exec = Exec::kAuto);

}  // namespace hgame

#endif  // HGAME_GAME_HPP_
