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

#include "hgame/combined.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgame/kernels.hpp"

namespace hgame {

RowStochasticMatrix build_p(int leader_index, int dim) {
  if (leader_index < 0 || leader_index >= dim) {
    throw std::invalid_argument("build_p: leader index out of range");
  }
  RowStochasticMatrix p = zero_matrix(dim);
  for (int r = 0; r < dim; ++r) p.at(r, leader_index) = 1.0;
  return p;
}

RowStochasticMatrix build_q_tilde(const std::vector<std::vector<double>>& copy_rows,
                                  std::span<const int> support_positions,
                                  int leader_index, int dim) {
  if (copy_rows.size() != support_positions.size()) {
    throw std::invalid_argument("build_q_tilde: rows/positions mismatch");
  }
  if (leader_index < 0 || leader_index >= dim) {
    throw std::invalid_argument("build_q_tilde: leader index out of range");
  }
  RowStochasticMatrix q = zero_matrix(dim);
  std::vector<uint8_t> filled(static_cast<size_t>(dim), 0);
  for (size_t s = 0; s < copy_rows.size(); ++s) {
    if (copy_rows[s].size() != copy_rows.size()) {
      throw std::invalid_argument("build_q_tilde: copy dimension mismatch");
    }
    const int r = support_positions[s];
    for (size_t c = 0; c < copy_rows.size(); ++c) {
      q.at(r, support_positions[c]) = copy_rows[s][c];
    }
    filled[static_cast<size_t>(r)] = 1;
  }
  // Rows outside the support (the leader's, when it is a new action) become
  // self-loops so the matrix stays row-stochastic on the reduced space.
  for (int r = 0; r < dim; ++r) {
    if (!filled[static_cast<size_t>(r)]) q.at(r, r) = 1.0;
  }
  return q;
}

RowStochasticMatrix combine(double beta1, double beta2, const RowStochasticMatrix& p,
                            const RowStochasticMatrix& q) {
  if (p.dim != q.dim) throw std::invalid_argument("combine: dimension mismatch");
  RowStochasticMatrix m = zero_matrix(p.dim);
  for (size_t i = 0; i < m.data.size(); ++i) {
    m.data[i] = beta1 * p.data[i] + beta2 * q.data[i];
  }
  return m;
}

namespace {

ActionId bootstrap_action(const Game* game, OracleStats* stats) {
  if (game == nullptr) return 0;
  OpponentHistory h;
  h.push(0, 1.0);
  return pure_oracle(*game, h, stats);
}

}  // namespace

CombinedRunner::CombinedRunner(const Game* game, int n, int horizon, uint64_t seed,
                               double gain_max, CombinedOptions options)
    : game_(game),
      n_(n),
      horizon_(horizon),
      cap_(expansion_cap(horizon)),
      gain_max_(gain_max),
      options_(options),
      master_(make_hedge(2, horizon)),
      fpl_(fpl_init(n, horizon, seed)),
      ledger_(n) {
  if (!(gain_max > 0.0)) throw std::invalid_argument("runner: bad gain_max");
  if (options_.forced_perturbation_eta) {
    fpl_.perturbation.eta = *options_.forced_perturbation_eta;
  }
  support_.actions = {bootstrap_action(game_, &stats_.oracle)};
  support_.epoch_start = 1;
  support_.epoch = 0;
  ledger_.reset(support_.actions);
  restart_copies(1);
}

void CombinedRunner::restart_copies(int t) {
  copies_.clear();
  copies_.reserve(support_.actions.size());
  for (size_t s = 0; s < support_.actions.size(); ++s) {
    copies_.push_back(make_hedge(support_.size(), horizon_));
  }
  ledger_.reset(support_.actions);
  support_.epoch_start = t;
}

MixedStrategy CombinedRunner::round(std::span<const double> gain, int t) {
  if (gain.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("runner: gain dimension mismatch");
  }
  stats_.restarted = false;

  if (t > 1 && t <= cap_) {
    SupportSet grown = expand(support_, ledger_, t, &stats_.oracle);
    if (grown.actions != support_.actions) {
      support_ = std::move(grown);
      restart_copies(t);
      stats_.restarted = true;
    }
  }

  const int s_size = support_.size();
  std::vector<std::vector<double>> copy_rows(static_cast<size_t>(s_size));
  for (int s = 0; s < s_size; ++s) {
    copy_rows[static_cast<size_t>(s)] =
        hedge_distribution(copies_[static_cast<size_t>(s)]).probs;
  }

  const ActionId leader = fpl_select(fpl_, &stats_.oracle);
  stats_.leader_choice = leader;

  double beta1, beta2;
  if (options_.forced_beta) {
    beta1 = (*options_.forced_beta)[0];
    beta2 = (*options_.forced_beta)[1];
  } else {
    const MixedStrategy b = hedge_distribution(master_);
    beta1 = b.probs[0];
    beta2 = b.probs[1];
  }
  stats_.beta1 = beta1;
  stats_.beta2 = beta2;

  // Reduced index space over the support plus the leader's action.
  const bool leader_in_support = support_.contains(leader);
  const bool include_leader = leader_in_support || !(options_.forced_beta && beta1 == 0.0);
  std::vector<ActionId> reduced = support_.actions;
  if (!leader_in_support && include_leader) {
    reduced.insert(std::upper_bound(reduced.begin(), reduced.end(), leader), leader);
  }
  const int dim = static_cast<int>(reduced.size());
  std::vector<int> support_positions(static_cast<size_t>(s_size));
  {
    int shift = 0;
    for (int k = 0; k < s_size; ++k) {
      if (!leader_in_support && include_leader && shift == 0 &&
          support_.actions[static_cast<size_t>(k)] > leader) {
        shift = 1;
      }
      support_positions[static_cast<size_t>(k)] = k + shift;
    }
  }
  const int leader_index =
      include_leader
          ? static_cast<int>(std::lower_bound(reduced.begin(), reduced.end(), leader) -
                             reduced.begin())
          : -1;

  RowStochasticMatrix q_tilde =
      build_q_tilde(copy_rows, support_positions,
                    include_leader ? leader_index : 0, dim);
  RowStochasticMatrix m_t;
  if (include_leader) {
    m_t = combine(beta1, beta2, build_p(leader_index, dim), q_tilde);
  } else {
    m_t = q_tilde;
  }

  const double eps =
      options_.fixed_point_eps.value_or(1.0 / std::sqrt(static_cast<double>(t)));
  StationaryResult st = stationary(m_t, eps);
  stats_.residual = st.residual;
  stats_.support_size = s_size;
  stats_.epoch = support_.epoch;

  MixedStrategy x;
  x.support = reduced;
  x.probs = std::move(st.x);

  // Gains restricted to the reduced space.
  std::vector<double> gain_red(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    gain_red[static_cast<size_t>(k)] = gain[static_cast<size_t>(reduced[static_cast<size_t>(k)])];
  }

  stats_.v1 = gain[static_cast<size_t>(leader)];
  double v2 = 0.0;
  for (int r = 0; r < dim; ++r) {
    double row_gain = 0.0;
    for (int c = 0; c < dim; ++c) row_gain += q_tilde.at(r, c) * gain_red[static_cast<size_t>(c)];
    v2 += x.probs[static_cast<size_t>(r)] * row_gain;
  }
  stats_.v2 = v2;

  const double meta[2] = {stats_.v1 / gain_max_, v2 / gain_max_};
  hedge_update(master_, meta);

  std::vector<double> scaled(gain.size());
  for (size_t i = 0; i < gain.size(); ++i) scaled[i] = gain[i] / gain_max_;
  fpl_update(fpl_, scaled);

  std::vector<double> copy_gain(static_cast<size_t>(s_size));
  for (int s = 0; s < s_size; ++s) {
    const double w = x.probs[static_cast<size_t>(support_positions[static_cast<size_t>(s)])] / gain_max_;
    for (int c = 0; c < s_size; ++c) {
      copy_gain[static_cast<size_t>(c)] =
          w * gain[static_cast<size_t>(support_.actions[static_cast<size_t>(c)])];
    }
    hedge_update(copies_[static_cast<size_t>(s)], copy_gain);
  }

  if (t < cap_) ledger_.accumulate(x, gain);
  return x;
}

}  // namespace hgame
