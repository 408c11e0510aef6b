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

#include "hgame/swap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgame {

void RowStochasticMatrix::validate(double tol) const {
  if (dim < 1 || data.size() != static_cast<size_t>(dim) * dim) {
    throw std::invalid_argument("row-stochastic matrix: bad shape");
  }
  for (int r = 0; r < dim; ++r) {
    double sum = 0.0;
    for (int c = 0; c < dim; ++c) {
      const double v = at(r, c);
      if (!(v >= 0.0)) {
        throw std::invalid_argument("row-stochastic matrix: negative entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw std::invalid_argument("row-stochastic matrix: row sum " +
                                  std::to_string(sum));
    }
  }
}

RowStochasticMatrix zero_matrix(int dim) {
  RowStochasticMatrix m;
  m.dim = dim;
  m.data.assign(static_cast<size_t>(dim) * dim, 0.0);
  return m;
}

namespace {

// y = M^T x
void transpose_apply(const RowStochasticMatrix& m, const std::vector<double>& x,
                     std::vector<double>& y) {
  const int d = m.dim;
  std::fill(y.begin(), y.end(), 0.0);
  for (int r = 0; r < d; ++r) {
    const double xr = x[static_cast<size_t>(r)];
    if (xr == 0.0) continue;
    const double* row = m.data.data() + static_cast<size_t>(r) * d;
    for (int c = 0; c < d; ++c) y[static_cast<size_t>(c)] += xr * row[c];
  }
}

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

void renormalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  if (s > 0.0) {
    for (double& v : x) v /= s;
  }
}

// Direct route: solve (M^T - I) x = 0 with sum(x) = 1 by Gaussian
// elimination, then project onto the simplex. Returns false when the pivot
// structure is too degenerate to solve.
bool direct_solve(const RowStochasticMatrix& m, std::vector<double>& x) {
  const int d = m.dim;
  std::vector<double> a(static_cast<size_t>(d) * d, 0.0);
  std::vector<double> b(static_cast<size_t>(d), 0.0);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      a[static_cast<size_t>(r) * d + c] = m.at(c, r) - (r == c ? 1.0 : 0.0);
    }
  }
  for (int c = 0; c < d; ++c) a[static_cast<size_t>(d - 1) * d + c] = 1.0;
  b[static_cast<size_t>(d - 1)] = 1.0;

  for (int col = 0; col < d; ++col) {
    int piv = col;
    double best = std::abs(a[static_cast<size_t>(col) * d + col]);
    for (int r = col + 1; r < d; ++r) {
      const double v = std::abs(a[static_cast<size_t>(r) * d + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-13) return false;
    if (piv != col) {
      for (int c = 0; c < d; ++c) {
        std::swap(a[static_cast<size_t>(piv) * d + c], a[static_cast<size_t>(col) * d + c]);
      }
      std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
    }
    const double p = a[static_cast<size_t>(col) * d + col];
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<size_t>(r) * d + col] / p;
      if (f == 0.0) continue;
      for (int c = col; c < d; ++c) {
        a[static_cast<size_t>(r) * d + c] -= f * a[static_cast<size_t>(col) * d + c];
      }
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
    }
  }
  x.resize(static_cast<size_t>(d));
  for (int r = 0; r < d; ++r) {
    x[static_cast<size_t>(r)] = b[static_cast<size_t>(r)] / a[static_cast<size_t>(r) * d + r];
  }
  for (double& v : x) v = std::max(v, 0.0);
  renormalize(x);
  return true;
}

}  // namespace

StationaryResult stationary(const RowStochasticMatrix& m, double eps,
                            std::span<const double> warm) {
  m.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("stationary: eps must be > 0");
  const int d = m.dim;

  StationaryResult res;
  std::vector<double> x;
  if (warm.size() == static_cast<size_t>(d)) {
    x.assign(warm.begin(), warm.end());
    renormalize(x);
  } else {
    x.assign(static_cast<size_t>(d), 1.0 / d);
  }
  std::vector<double> y(static_cast<size_t>(d));

  constexpr double kDamping = 0.99;
  const int max_iters =
      10 * static_cast<int>(std::ceil(d * std::log(1.0 / eps)));

  std::vector<double> best_x = x;
  double best_res = std::numeric_limits<double>::infinity();
  for (int it = 0; it <= max_iters; ++it) {
    transpose_apply(m, x, y);
    const double r = l1_diff(y, x);
    if (r < best_res) {
      best_res = r;
      best_x = x;
    }
    if (r <= eps) {
      res.x = std::move(x);
      res.residual = r;
      res.iterations = it;
      return res;
    }
    for (int i = 0; i < d; ++i) {
      x[static_cast<size_t>(i)] =
          kDamping * y[static_cast<size_t>(i)] + (1.0 - kDamping) * x[static_cast<size_t>(i)];
    }
    renormalize(x);
    res.iterations = it + 1;
  }

  // Residual stalled; try the direct route.
  std::vector<double> solved;
  if (direct_solve(m, solved)) {
    transpose_apply(m, solved, y);
    const double r = l1_diff(y, solved);
    if (r < best_res) {
      best_res = r;
      best_x = std::move(solved);
    }
  }
  if (best_res <= eps) {
    res.x = std::move(best_x);
    res.residual = best_res;
    res.used_fallback = true;
    return res;
  }
  throw std::runtime_error("stationary: solver failed, best residual " +
                           std::to_string(best_res));
}

BmState make_bm(int dim, int horizon) {
  if (dim < 1) throw std::invalid_argument("bm: dim must be >= 1");
  BmState s;
  s.dim = dim;
  s.horizon = horizon;
  s.copies.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) s.copies.push_back(make_hedge(dim, horizon));
  return s;
}

BmPlay bm_strategy(const BmState& s, double eps, std::span<const double> warm) {
  BmPlay play;
  play.q = zero_matrix(s.dim);
  for (int r = 0; r < s.dim; ++r) {
    const MixedStrategy q = hedge_distribution(s.copies[static_cast<size_t>(r)]);
    for (int c = 0; c < s.dim; ++c) play.q.at(r, c) = q.probs[static_cast<size_t>(c)];
  }
  StationaryResult st = stationary(play.q, eps, warm);
  play.residual = st.residual;
  play.x.support.resize(static_cast<size_t>(s.dim));
  for (int i = 0; i < s.dim; ++i) play.x.support[static_cast<size_t>(i)] = i;
  play.x.probs = std::move(st.x);
  return play;
}

void bm_update(BmState& s, const MixedStrategy& x, std::span<const double> g,
               double gain_max) {
  if (g.size() != static_cast<size_t>(s.dim)) {
    throw std::invalid_argument("bm_update: dimension mismatch");
  }
  if (!(gain_max > 0.0)) throw std::invalid_argument("bm_update: bad gain_max");
  std::vector<double> scaled(g.size());
  for (int r = 0; r < s.dim; ++r) {
    const double w = x.prob_of(r) / gain_max;
    for (size_t c = 0; c < g.size(); ++c) scaled[c] = w * g[c];
    hedge_update(s.copies[static_cast<size_t>(r)], scaled);
  }
}

}  // namespace hgame
