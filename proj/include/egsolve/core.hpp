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

#include <stdexcept>
#include <vector>

#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"

namespace egsolve {

/// max(e(v) - w, 0) with infinity absorbing; the local requirement of an edge.
inline Energy edge_requirement(Energy target, Weight w) {
  if (target.is_infinite()) return Energy::infinity();
  const __int128 need = static_cast<__int128>(target.value()) - w;
  if (need <= 0) return Energy(0);
  if (need >= std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("energy overflow");
  return Energy(static_cast<std::int64_t>(need));
}

/// e(u) + w >= e(v) with infinity arithmetic (infinity + w = infinity).
inline bool edge_satisfied(Energy source, Weight w, Energy target) {
  if (source.is_infinite()) return true;
  if (target.is_infinite()) return false;
  return static_cast<__int128>(source.value()) + w >= target.value();
}

enum class InfinityCheck {
  /// Confirm that Bob wins the subgame on {e = inf}; pseudo-polynomial in that subgame.
  Solve,
  /// Caller guarantees {e = inf} is exactly Bob's winning region.
  Trusted,
};

/**
 * True iff e is the minimal energy function.
 *
 * Every Alice node must equal the minimum, every Bob node the maximum, of
 * max(e(v) - w(u,v), 0) over its out-edges. These equations also admit
 * larger solutions, so in addition every finite positive e(u) must be forced
 * through tight edges (e(v) - w(u,v) = e(u)) from nodes with e = 0, and the
 * infinite nodes must be losing for Alice. All but the last check are one
 * pass over the edges.
 */
bool verify_minimal(const GameGraph& graph, const EnergyFunction& e,
                    InfinityCheck infinity = InfinityCheck::Solve);

/// Alice nodes have some satisfied out-edge, Bob nodes have all out-edges satisfied.
bool check_progress_conditions(const GameGraph& graph, const EnergyFunction& e);

/// Raised when apply_potential receives an energy function it cannot have come from
/// a valid approximation.
class PotentialContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PotentialTransform {
  /// Subgraph induced by the finite-energy nodes, with w'(u,v) = w(u,v) + e(u) - e(v).
  GameGraph graph;
  /// origin[i] is the node of the input graph that node i of `graph` stands for.
  std::vector<NodeId> origin;
  /// offset[i] = e(origin[i]), to be added back to energies of `graph`.
  std::vector<std::int64_t> offset;
};

/**
 * Potential transformation restricted to {v : e(v) < inf}.
 *
 * Edges from finite Alice nodes into infinite nodes are dropped. A finite Bob
 * node with such an edge, or a finite Alice node without a finite successor,
 * throws PotentialContractError.
 */
PotentialTransform apply_potential(const GameGraph& graph, const EnergyFunction& e);

}  // namespace egsolve
