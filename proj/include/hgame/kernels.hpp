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

#ifndef HGAME_KERNELS_HPP_
#define HGAME_KERNELS_HPP_

#include <cstdint>
#include <span>

#include "hgame/game.hpp"
#include "hgame/types.hpp"

// Data-parallel inner loops over the action space. Each kernel has a serial
// reference implementation and an OpenMP one; both produce identical output
// bit for bit (every output element is computed by exactly one thread, and
// argmax reduction combines per-thread chunks in index order), so the choice
// of Exec never changes results. Nested use inside an already-parallel
// region degrades gracefully to the serial path.

namespace hgame {

struct ArgmaxResult {
  ActionId index = -1;
  double value = 0.0;
};

// Element count above which kAuto switches to the OpenMP path.
inline constexpr int kParallelCutover = 2048;

// out[i] = sum_s w[s] * A(i, cols[s]) for every own action i.
void row_score_scan(const Game& game, std::span<const ActionId> cols,
                    std::span<const double> w, std::span<double> out,
                    Exec exec = Exec::kAuto);

// out[j] = sum_s w[s] * A(rows[s], j) for every opponent action j.
void col_score_scan(const Game& game, std::span<const ActionId> rows,
                    std::span<const double> w, std::span<double> out,
                    Exec exec = Exec::kAuto);

// Smallest-index argmax / argmin.
ArgmaxResult argmax_span(std::span<const double> v, Exec exec = Exec::kAuto);
ArgmaxResult argmin_span(std::span<const double> v, Exec exec = Exec::kAuto);

// Smallest-index argmax of base[i] + e_i where e_i is an Exp(rate) draw keyed
// by (seed, i). An empty base scans the perturbations alone; rate=+inf makes
// every perturbation 0.
ArgmaxResult perturbed_argmax(std::span<const double> base, int n, double rate,
                              uint64_t seed, Exec exec = Exec::kAuto);

// acc += g and acc += c * g.
void vec_add(std::span<double> acc, std::span<const double> g, Exec exec = Exec::kAuto);
void vec_add_scaled(std::span<double> acc, std::span<const double> g, double c,
                    Exec exec = Exec::kAuto);

}  // namespace hgame

#endif  // HGAME_KERNELS_HPP_
