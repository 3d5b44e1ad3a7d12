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
#include <vector>

#include "egsolve/energy.hpp"
#include "egsolve/gen.hpp"
#include "egsolve/graph.hpp"

namespace egsolve::testing {

/// Three-node example: a (Alice) = 0, b = 1, c = 2 (Bob).
inline GameGraph example_game() {
  return GameGraph({Player::Alice, Player::Bob, Player::Bob},
                   {{0, 1, 7}, {0, 2, 2}, {1, 2, 4}, {1, 0, -2}, {2, 1, 3}, {2, 0, -8}});
}

/// The penalty-3 example: a -> b 7, a -> c 2, b -> c 4, c -> a -8.
inline GameGraph penalty3_game() {
  return GameGraph({Player::Alice, Player::Bob, Player::Bob},
                   {{0, 1, 7}, {0, 2, 2}, {1, 2, 4}, {2, 0, -8}});
}

inline EnergyFunction energies(std::initializer_list<std::int64_t> values) {
  EnergyFunction e;
  for (std::int64_t v : values) e.push_back(v < 0 ? Energy::infinity() : Energy(v));
  return e;
}

/**
 * Least fixed point of e(u) = min/max over out-edges of max(e(v) - w, 0),
 * iterated synchronously from zero; values above n * W become infinite.
 * Independent of the library's solvers and oracle.
 */
inline EnergyFunction kleene_energies(const GameGraph& g) {
  const std::size_t n = g.num_nodes();
  const std::int64_t cap = static_cast<std::int64_t>(n) * g.max_abs_weight();
  constexpr std::int64_t kInf = -1;
  std::vector<std::int64_t> e(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::int64_t> next(n);
    for (NodeId u = 0; u < n; ++u) {
      const bool alice = g.owner(u) == Player::Alice;
      bool first = true;
      std::int64_t best = 0;
      for (EdgeId id : g.out_edges(u)) {
        const Edge& edge = g.edge(id);
        std::int64_t need = e[edge.to] == kInf ? kInf : std::max<std::int64_t>(e[edge.to] - edge.weight, 0);
        if (need != kInf && need > cap) need = kInf;
        auto less = [](std::int64_t a, std::int64_t b) {
          if (a == kInf) return false;
          return b == kInf || a < b;
        };
        if (first || (alice ? less(need, best) : less(best, need))) best = need;
        first = false;
      }
      next[u] = best;
      if (best != e[u]) changed = true;
    }
    e = std::move(next);
  }
  EnergyFunction out;
  for (std::int64_t v : e) out.push_back(v == kInf ? Energy::infinity() : Energy(v));
  return out;
}

/// Small random game for property loops: n in [2, max_n], out-degree <= 3, W <= max_w.
inline GameGraph small_random(std::uint64_t seed, std::size_t max_n = 5, Weight max_w = 10) {
  SplitMix64 rng(seed ^ 0x5eedULL);
  GenSpec spec;
  spec.n = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(max_n)));
  const std::size_t cap = std::min<std::size_t>(3, spec.n - 1);
  spec.m = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(spec.n), static_cast<std::int64_t>(spec.n * cap)));
  spec.max_weight = rng.uniform(1, max_w);
  spec.max_out_degree = 3;
  spec.seed = seed;
  return random_game(spec);
}

/// Sum of edge weights along a cycle given as an edge list.
inline std::int64_t cycle_weight(const GameGraph& g, const std::vector<EdgeId>& cycle) {
  std::int64_t total = 0;
  for (EdgeId id : cycle) total += g.edge(id).weight;
  return total;
}

}  // namespace egsolve::testing
