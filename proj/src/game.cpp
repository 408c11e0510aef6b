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

#include "hgame/game.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hgame/kernels.hpp"
#include "json.hpp"

namespace hgame {

namespace {

void check_action(int n, ActionId a, const char* what) {
  if (a < 0 || a >= n) {
    throw std::invalid_argument(std::string(what) + ": action out of range");
  }
}

}  // namespace

HiddenGameSpec make_hidden_game(int n, int r, double rho, uint64_t seed, int role) {
  if (n < 2) throw std::invalid_argument("make_hidden_game: n must be >= 2");
  if (r < 1 || r >= n) throw std::invalid_argument("make_hidden_game: need 1 <= r < n");
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("make_hidden_game: rho must lie in (0,1)");
  }
  if (role != 1 && role != 2) throw std::invalid_argument("make_hidden_game: bad role");

  HiddenGameSpec g;
  g.n = n;
  g.rho = rho;
  g.role = role;
  g.generated = true;
  g.r_count = r;
  g.seed = seed;

  // Floyd's sampling: a uniformly random r-subset with O(r) draws.
  Rng rng(substream(seed, Stream::kSubset));
  std::set<ActionId> members;
  for (int i = n - r; i < n; ++i) {
    auto t = static_cast<ActionId>(rng.next_below(static_cast<uint64_t>(i) + 1));
    if (!members.insert(t).second) members.insert(static_cast<ActionId>(i));
  }
  g.r_set.assign(members.begin(), members.end());
  g.in_r.assign(static_cast<size_t>(n), 0);
  for (ActionId a : g.r_set) g.in_r[static_cast<size_t>(a)] = 1;

  g.base_key = substream(seed, Stream::kMatrix);
  if (n <= kDenseBaseLimit) {
    g.base_dense.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        g.base_dense[static_cast<size_t>(i) * n + j] =
            unit_at(g.base_key, static_cast<uint64_t>(i), static_cast<uint64_t>(j));
      }
    }
  }
  return g;
}

HiddenGameSpec hidden_game_from_parts(int n, std::vector<ActionId> r_set, double rho,
                                      std::vector<double> base_dense, int role) {
  if (n < 1) throw std::invalid_argument("hidden game: n must be positive");
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("hidden game: rho must lie in (0,1)");
  }
  if (base_dense.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("hidden game: base matrix size mismatch");
  }
  for (double v : base_dense) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("hidden game: base entries must lie in [0,1]");
    }
  }
  HiddenGameSpec g;
  g.n = n;
  g.rho = rho;
  g.role = role;
  std::sort(r_set.begin(), r_set.end());
  r_set.erase(std::unique(r_set.begin(), r_set.end()), r_set.end());
  if (r_set.empty() || r_set.front() < 0 || r_set.back() >= n) {
    throw std::invalid_argument("hidden game: bad dominant subset");
  }
  g.r_set = std::move(r_set);
  g.r_count = static_cast<int>(g.r_set.size());
  g.in_r.assign(static_cast<size_t>(n), 0);
  for (ActionId a : g.r_set) g.in_r[static_cast<size_t>(a)] = 1;
  g.base_dense = std::move(base_dense);
  return g;
}

GameMatrix game_from_entries(int n, std::vector<double> entries) {
  if (n < 1) throw std::invalid_argument("game matrix: n must be positive");
  if (entries.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("game matrix: entry count mismatch");
  }
  GameMatrix g;
  g.n = n;
  g.entries = std::move(entries);
  g.lo = *std::min_element(g.entries.begin(), g.entries.end());
  g.hi = *std::max_element(g.entries.begin(), g.entries.end());
  return g;
}

GameMatrix make_random_game(int n, uint64_t seed) {
  std::vector<double> e(static_cast<size_t>(n) * n);
  const uint64_t key = substream(seed, Stream::kMatrix);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      e[static_cast<size_t>(i) * n + j] =
          unit_at(key, static_cast<uint64_t>(i), static_cast<uint64_t>(j));
    }
  }
  return game_from_entries(n, std::move(e));
}

Game::Game(HiddenGameSpec g) : rep_(std::move(g)) {}
Game::Game(GameMatrix g) : rep_(std::move(g)) {}

int Game::actions() const {
  return std::visit([](const auto& g) { return g.n; }, rep_);
}

double Game::payoff(ActionId i, ActionId j) const {
  check_action(actions(), i, "payoff");
  check_action(actions(), j, "payoff");
  return std::visit([&](const auto& g) { return g.payoff(i, j); }, rep_);
}

double Game::gain_max() const {
  if (hidden() != nullptr) return 2.0;
  return std::max(0.0, matrix()->hi);
}

std::string Game::to_json() const {
  nlohmann::json j;
  if (const auto* h = hidden(); h != nullptr && h->generated) {
    j["n"] = h->n;
    j["r"] = h->r_count;
    j["rho"] = h->rho;
    j["seed"] = h->seed;
    j["role"] = h->role;
    return j.dump();
  }
  // Everything else serializes as an explicit matrix.
  const int n = actions();
  j["n"] = n;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < n; ++k) {
      row.push_back(std::visit([&](const auto& g) { return g.payoff(i, k); }, rep_));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

Game Game::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n")) throw std::invalid_argument("game spec: missing n");
  const int n = j.at("n").get<int>();
  if (j.contains("entries")) {
    std::vector<double> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : j.at("entries")) {
      for (const auto& v : row) e.push_back(v.get<double>());
    }
    return Game(game_from_entries(n, std::move(e)));
  }
  const int r = j.at("r").get<int>();
  const double rho = j.at("rho").get<double>();
  const auto seed = j.at("seed").get<uint64_t>();
  const int role = j.value("role", 1);
  return Game(make_hidden_game(n, r, rho, seed, role));
}

Game Game::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game spec: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

GainVector gain_vector(const Game& game, const MixedStrategy& y, Exec exec) {
  y.validate();
  const int n = game.actions();
  if (!y.support.empty() && y.support.back() >= n) {
    throw std::invalid_argument("gain_vector: strategy dimension mismatch");
  }
  GainVector out(static_cast<size_t>(n));
  row_score_scan(game, y.support, y.probs, out, exec);
  return out;
}

}  // namespace hgame
