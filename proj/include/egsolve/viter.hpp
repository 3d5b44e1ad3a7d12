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
#include <functional>
#include <vector>

#include "egsolve/admissible.hpp"
#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"

namespace egsolve {

struct ViterStats {
  std::vector<std::uint64_t> updates_per_node;
  std::uint64_t total_updates = 0;
  /// Edges scanned: initialisation plus out- and in-edges of every updated node.
  std::uint64_t edge_work = 0;
  double wall_ms = 0.0;
};

enum class PendingOrder { Fifo, Lifo };

struct ViterOptions {
  PendingOrder order = PendingOrder::Fifo;
  /// Recompute Alice counters from scratch after every update and throw on mismatch.
  bool check_counters = false;
  /// Called after every update with the updated node and the current energies.
  std::function<void(NodeId, const EnergyFunction&)> on_update;
};

struct ViterResult {
  EnergyFunction energies;
  ViterStats stats;
};

/**
 * Value iteration over an admissible list with per-Alice-node counters of
 * satisfied out-edges.
 *
 * Starts from the smallest list member and raises violating nodes to the
 * next list member at or above their local requirement until no node
 * violates the progress conditions. Returns the minimal energies whenever
 * `list` contains every minimal-energy value of the game.
 */
ViterResult solve_with_list(const GameGraph& graph, const AdmissibleList& list,
                            const ViterOptions& options = {});

}  // namespace egsolve
