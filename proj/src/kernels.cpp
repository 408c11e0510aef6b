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

#include "hgame/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hgame/rng.hpp"

namespace hgame {

namespace {

bool use_parallel(Exec exec, long work) {
  switch (exec) {
    case Exec::kSerial:
      return false;
    case Exec::kParallel:
      return true;
    case Exec::kAuto:
      return work >= kParallelCutover && omp_get_max_threads() > 1 &&
             !omp_in_parallel();
  }
  return false;
}

template <typename F>
void fill_scan(int n, bool parallel, std::span<double> out, F&& f) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
  } else {
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
  }
}

// Chunked scan with an index-ordered serial combine: the winner (and its
// smallest-index tie-break) is independent of the chunk count, so serial
// and parallel paths agree exactly.
template <typename Score, typename Better>
ArgmaxResult select_generic(int n, bool parallel, Score&& score, Better&& better) {
  ArgmaxResult best{0, score(0)};
  if (!parallel || n < 2) {
    for (int i = 1; i < n; ++i) {
      const double v = score(i);
      if (better(v, best.value)) best = {i, v};
    }
    return best;
  }
  const int chunks = std::min(n, omp_get_max_threads());
  std::vector<ArgmaxResult> local(static_cast<size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    const int lo = static_cast<int>(static_cast<long>(n) * c / chunks);
    const int hi = static_cast<int>(static_cast<long>(n) * (c + 1) / chunks);
    ArgmaxResult b{lo, score(lo)};
    for (int i = lo + 1; i < hi; ++i) {
      const double v = score(i);
      if (better(v, b.value)) b = {i, v};
    }
    local[static_cast<size_t>(c)] = b;
  }
  best = local[0];
  for (int c = 1; c < chunks; ++c) {
    if (better(local[static_cast<size_t>(c)].value, best.value)) {
      best = local[static_cast<size_t>(c)];
    }
  }
  return best;
}

void check_pairs(const Game& game, std::span<const ActionId> ids,
                 std::span<const double> w, const char* what) {
  if (ids.size() != w.size()) {
    throw std::invalid_argument(std::string(what) + ": ids/weights size mismatch");
  }
  const int n = game.actions();
  for (ActionId a : ids) {
    if (a < 0 || a >= n) {
      throw std::invalid_argument(std::string(what) + ": action out of range");
    }
  }
}

}  // namespace

void row_score_scan(const Game& game, std::span<const ActionId> cols,
                    std::span<const double> w, std::span<double> out, Exec exec) {
  check_pairs(game, cols, w, "row_score_scan");
  const int n = game.actions();
  if (out.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("row_score_scan: output size mismatch");
  }
  const size_t m = cols.size();
  const bool par =
      use_parallel(exec, static_cast<long>(n) * static_cast<long>(std::max<size_t>(m, 1)));

  if (const auto* h = game.hidden()) {
    double wsum = 0.0;
    for (double v : w) wsum += v;
    const double rho = h->rho;
    if (!h->base_dense.empty()) {
      const double* a1 = h->base_dense.data();
      const uint8_t* in_r = h->in_r.data();
      fill_scan(n, par, out, [&](int i) {
        const double* row = a1 + static_cast<size_t>(i) * static_cast<size_t>(n);
        double acc = 0.0;
        for (size_t s = 0; s < m; ++s) acc += w[s] * row[static_cast<size_t>(cols[s])];
        return (in_r[i] ? wsum : 0.0) + rho * acc;
      });
    } else {
      const uint64_t key = h->base_key;
      const uint8_t* in_r = h->in_r.data();
      fill_scan(n, par, out, [&](int i) {
        const uint64_t hi = hash_mix(key, static_cast<uint64_t>(i));
        double acc = 0.0;
        for (size_t s = 0; s < m; ++s) {
          acc += w[s] * unit_from_bits(hash_mix(hi, static_cast<uint64_t>(cols[s])));
        }
        return (in_r[i] ? wsum : 0.0) + rho * acc;
      });
    }
    return;
  }

  const auto* g = game.matrix();
  const double* e = g->entries.data();
  fill_scan(n, par, out, [&](int i) {
    const double* row = e + static_cast<size_t>(i) * static_cast<size_t>(n);
    double acc = 0.0;
    for (size_t s = 0; s < m; ++s) acc += w[s] * row[static_cast<size_t>(cols[s])];
    return acc;
  });
}

void col_score_scan(const Game& game, std::span<const ActionId> rows,
                    std::span<const double> w, std::span<double> out, Exec exec) {
  check_pairs(game, rows, w, "col_score_scan");
  const int n = game.actions();
  if (out.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("col_score_scan: output size mismatch");
  }
  const size_t m = rows.size();
  const bool par =
      use_parallel(exec, static_cast<long>(n) * static_cast<long>(std::max<size_t>(m, 1)));

  if (const auto* h = game.hidden()) {
    double member_weight = 0.0;
    for (size_t s = 0; s < m; ++s) {
      if (h->in_r[static_cast<size_t>(rows[s])]) member_weight += w[s];
    }
    const double rho = h->rho;
    if (!h->base_dense.empty()) {
      const double* a1 = h->base_dense.data();
      fill_scan(n, par, out, [&](int j) {
        double acc = 0.0;
        for (size_t s = 0; s < m; ++s) {
          acc += w[s] * a1[static_cast<size_t>(rows[s]) * static_cast<size_t>(n) +
                           static_cast<size_t>(j)];
        }
        return member_weight + rho * acc;
      });
    } else {
      const uint64_t key = h->base_key;
      fill_scan(n, par, out, [&](int j) {
        double acc = 0.0;
        for (size_t s = 0; s < m; ++s) {
          acc += w[s] * unit_from_bits(hash_mix(
                            hash_mix(key, static_cast<uint64_t>(rows[s])),
                            static_cast<uint64_t>(j)));
        }
        return member_weight + rho * acc;
      });
    }
    return;
  }

  const auto* g = game.matrix();
  const double* e = g->entries.data();
  fill_scan(n, par, out, [&](int j) {
    double acc = 0.0;
    for (size_t s = 0; s < m; ++s) {
      acc += w[s] * e[static_cast<size_t>(rows[s]) * static_cast<size_t>(n) +
                      static_cast<size_t>(j)];
    }
    return acc;
  });
}

ArgmaxResult argmax_span(std::span<const double> v, Exec exec) {
  if (v.empty()) throw std::invalid_argument("argmax_span: empty input");
  const int n = static_cast<int>(v.size());
  return select_generic(
      n, use_parallel(exec, n), [&](int i) { return v[static_cast<size_t>(i)]; },
      [](double a, double b) { return a > b; });
}

ArgmaxResult argmin_span(std::span<const double> v, Exec exec) {
  if (v.empty()) throw std::invalid_argument("argmin_span: empty input");
  const int n = static_cast<int>(v.size());
  return select_generic(
      n, use_parallel(exec, n), [&](int i) { return v[static_cast<size_t>(i)]; },
      [](double a, double b) { return a < b; });
}

ArgmaxResult perturbed_argmax(std::span<const double> base, int n, double rate,
                              uint64_t seed, Exec exec) {
  if (n <= 0) throw std::invalid_argument("perturbed_argmax: empty action space");
  if (!base.empty() && base.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("perturbed_argmax: base size mismatch");
  }
  const bool has_base = !base.empty();
  return select_generic(
      n, use_parallel(exec, n),
      [&](int i) {
        const double b = has_base ? base[static_cast<size_t>(i)] : 0.0;
        return b + exponential_from_unit(unit_at(seed, static_cast<uint64_t>(i)), rate);
      },
      [](double a, double b) { return a > b; });
}

void vec_add(std::span<double> acc, std::span<const double> g, Exec exec) {
  if (acc.size() != g.size()) throw std::invalid_argument("vec_add: size mismatch");
  const int n = static_cast<int>(acc.size());
  if (use_parallel(exec, n)) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] += g[static_cast<size_t>(i)];
  } else {
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] += g[static_cast<size_t>(i)];
  }
}

void vec_add_scaled(std::span<double> acc, std::span<const double> g, double c,
                    Exec exec) {
  if (acc.size() != g.size()) {
    throw std::invalid_argument("vec_add_scaled: size mismatch");
  }
  const int n = static_cast<int>(acc.size());
  if (use_parallel(exec, n)) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      acc[static_cast<size_t>(i)] += c * g[static_cast<size_t>(i)];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      acc[static_cast<size_t>(i)] += c * g[static_cast<size_t>(i)];
    }
  }
}

}  // namespace hgame
