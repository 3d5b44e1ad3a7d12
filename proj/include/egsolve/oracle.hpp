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
#include <optional>
#include <stdexcept>
#include <vector>

#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"
#include "egsolve/rational.hpp"

namespace egsolve {

/// Exhaustive ground truth for small instances.
namespace oracle {

struct Budget {
  std::uint64_t max_strategy_pairs = 1'000'000;
  std::size_t max_nodes = 10;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Positional strategies of both players as one chosen out-edge per node; the
 * Alice entries form sigma and the Bob entries tau. Edges rather than
 * successors so that parallel edges stay distinguishable.
 */
struct StrategyPair {
  std::vector<EdgeId> choice;
};

/// Minimal energy of s in G(sigma, tau): infinity if the reached cycle is
/// negative, otherwise max(0, -min prefix sum of the simple path from s).
Energy eval_pair(const GameGraph& graph, const StrategyPair& pair, NodeId s);

/// Number of strategy pairs (product of out-degrees), saturating at UINT64_MAX.
std::uint64_t strategy_pair_count(const GameGraph& graph);

/// min over sigma of max over tau of eval_pair, for every node.
EnergyFunction brute_force_energies(const GameGraph& graph, const Budget& budget = {});

struct PenaltyReport {
  /// Penalty of each node, taking Bob strategies that are optimal at that node.
  std::vector<Rational> per_node;
  /// Same, restricted to Bob strategies optimal at every node simultaneously.
  std::vector<Rational> global;

  Rational graph_penalty() const;
  Rational global_graph_penalty() const;
};

PenaltyReport brute_force_penalty(const GameGraph& graph, const Budget& budget = {});

struct ErgodicPartition {
  /// true: node is in S_A; false: node is in S_B.
  std::vector<bool> in_alice_part;
};

/// First non-trivial ergodic partition in increasing bitmask order of S_A, if any.
std::optional<ErgodicPartition> find_ergodic_partition(const GameGraph& graph,
                                                       const Budget& budget = {});

bool is_ergodic_partition(const GameGraph& graph, const std::vector<bool>& in_alice_part);

/// All simple cycles, each as its edge sequence starting at its smallest node.
std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const GameGraph& graph);

}  // namespace oracle
}  // namespace egsolve
