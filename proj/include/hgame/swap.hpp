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

#ifndef HGAME_SWAP_HPP_
#define HGAME_SWAP_HPP_

#include <span>
#include <vector>

#include "hgame/learners.hpp"
#include "hgame/types.hpp"

// Swap-regret minimization by reduction to per-action external-regret
// copies, plus the approximate stationary-distribution solver shared with
// the combined learner.

namespace hgame {

struct RowStochasticMatrix {
  int dim = 0;
  std::vector<double> data;  // dim*dim row-major

  double& at(int r, int c) { return data[static_cast<size_t>(r) * dim + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * dim + c]; }

  // Throws std::invalid_argument unless entries are nonnegative and every
  // row sums to 1 within tolerance.
  void validate(double tol = kDistributionTol) const;
};

RowStochasticMatrix zero_matrix(int dim);

struct StationaryResult {
  std::vector<double> x;
  double residual = 0.0;       // ||M^T x - x||_1 at return
  int iterations = 0;
  bool used_fallback = false;
};

// Distribution x with ||M^T x - x||_1 <= eps. Power iteration on M^T with
// damping 0.99 against periodic chains, starting from `warm` when provided
// (uniform otherwise); falls back to a direct linear solve with nonnegative
// projection if the residual stalls above eps after 10*ceil(dim*ln(1/eps))
// iterations. Throws std::runtime_error (carrying the best residual) if
// both routes fail.
StationaryResult stationary(const RowStochasticMatrix& m, double eps,
                            std::span<const double> warm = {});

// One Hedge copy per action; copy s is fed the play-weighted gains so that
// the stationary distribution of the stacked matrix transfers each copy's
// external-regret guarantee to swap regret.
struct BmState {
  int dim = 0;
  int horizon = 0;
  std::vector<HedgeState> copies;
};

BmState make_bm(int dim, int horizon);

// Default fixed-point accuracy for standalone use.
inline constexpr double kBmEps = 1e-10;

struct BmPlay {
  MixedStrategy x;          // dense over [0, dim)
  RowStochasticMatrix q;    // row s = distribution of copy s
  double residual = 0.0;
};

BmPlay bm_strategy(const BmState& s, double eps = kBmEps,
                   std::span<const double> warm = {});

// Copy s receives x(s) * g, rescaled into [0,1] by gain_max.
void bm_update(BmState& s, const MixedStrategy& x, std::span<const double> g,
               double gain_max);

}  // namespace hgame

#endif  // HGAME_SWAP_HPP_
