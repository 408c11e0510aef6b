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

#include "hgame/learners.hpp"

#include <cmath>
#include <stdexcept>

#include "hgame/kernels.hpp"
#include "hgame/rng.hpp"

namespace hgame {

HedgeState make_hedge(int dim, int horizon) {
  if (dim < 1) throw std::invalid_argument("hedge: dim must be >= 1");
  if (horizon < 1) throw std::invalid_argument("hedge: horizon must be >= 1");
  const double eta = std::sqrt(8.0 * std::log(static_cast<double>(dim)) / horizon);
  return make_hedge_eta(dim, eta);
}

HedgeState make_hedge_eta(int dim, double eta) {
  if (dim < 1) throw std::invalid_argument("hedge: dim must be >= 1");
  if (!(eta >= 0.0)) throw std::invalid_argument("hedge: eta must be >= 0");
  HedgeState s;
  s.dim = dim;
  s.eta = eta;
  s.cum.assign(static_cast<size_t>(dim), 0.0);
  return s;
}

MixedStrategy hedge_distribution(const HedgeState& s) {
  MixedStrategy out;
  const size_t dim = static_cast<size_t>(s.dim);
  out.support.resize(dim);
  out.probs.resize(dim);
  double m = s.cum[0];
  for (double v : s.cum) m = std::max(m, v);
  double z = 0.0;
  for (size_t i = 0; i < dim; ++i) {
    out.support[i] = static_cast<ActionId>(i);
    const double e = std::exp(s.eta * (s.cum[i] - m));
    out.probs[i] = e;
    z += e;
  }
  for (size_t i = 0; i < dim; ++i) out.probs[i] /= z;
  return out;
}

void hedge_update(HedgeState& s, std::span<const double> g) {
  if (g.size() != static_cast<size_t>(s.dim)) {
    throw std::invalid_argument("hedge_update: dimension mismatch");
  }
  for (size_t i = 0; i < g.size(); ++i) s.cum[i] += g[i];
}

FplState fpl_init(int n, int horizon, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("fpl: n must be >= 2");
  if (horizon < 1) throw std::invalid_argument("fpl: horizon must be >= 1");
  FplState s;
  s.n = n;
  s.horizon = horizon;
  s.perturbation.eta = std::sqrt(std::log(static_cast<double>(n)) / horizon);
  s.perturbation.seed = seed;
  s.cum.assign(static_cast<size_t>(n), 0.0);
  return s;
}

ActionId fpl_select(FplState& s, OracleStats* stats, Exec exec) {
  ++s.calls;
  if (stats != nullptr) ++stats->smooth_calls;
  return perturbed_argmax(s.cum, s.n, s.perturbation.eta, s.perturbation.seed, exec)
      .index;
}

void fpl_update(FplState& s, std::span<const double> g, Exec exec) {
  if (g.size() != static_cast<size_t>(s.n)) {
    throw std::invalid_argument("fpl_update: dimension mismatch");
  }
  vec_add(s.cum, g, exec);
}

}  // namespace hgame
