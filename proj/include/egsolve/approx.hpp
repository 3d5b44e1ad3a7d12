/*
 * Copyright 2026 The egsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"
#include "egsolve/viter.hpp"

namespace egsolve {

/// ceil(w / step) * step, rounding toward +infinity for negative weights too.
Weight round_up_to_multiple(Weight w, std::int64_t step);

struct RoundedGame {
  /// Same nodes and edges as the input with every weight rounded up to a multiple of `step`.
  GameGraph graph;
  std::int64_t step = 1;
};

RoundedGame round_weights(const GameGraph& graph, std::int64_t step);

struct Approximation {
  /// Minimal energies of the rounded game.
  EnergyFunction energies;
  /// Rounding granularity floor(c / n).
  std::int64_t step = 1;
  ViterStats stats;
};

/**
 * Additive approximation with error target c >= n.
 *
 * Rounds weights up to multiples of B = floor(c/n) and solves the rounded game
 * with the multiples-of-B list up to `bound`. The result never exceeds the
 * true minimal energy. When every node has penalty >= B and `bound` bounds the
 * finite minimal energies, the true energy is at most result + n*B <= result + c
 * and both functions are infinite on the same nodes.
 *
 * Throws std::invalid_argument for c < n.
 */
Approximation approximate_energies(const GameGraph& graph, std::int64_t bound, std::int64_t error);

}  // namespace egsolve
