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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "egsolve/energy.hpp"

namespace egsolve {

using NodeId = std::size_t;
using EdgeId = std::size_t;

enum class Player { Alice, Bob };

constexpr Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Weighted two-player game graph.
 *
 * Nodes are dense indices 0..n-1. Edges keep their insertion order, which is
 * also the order in which out_edges() and in_edges() list them. Parallel edges
 * are allowed (several reductions produce them); self-loops and sinks are
 * representable so that validate() can report them.
 */
class GameGraph {
 public:
  GameGraph() = default;
  GameGraph(std::vector<Player> owners, std::vector<Edge> edges);

  std::size_t num_nodes() const { return owners_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  Player owner(NodeId v) const { return owners_[v]; }
  const std::vector<Player>& owners() const { return owners_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_ids_.data() + out_begin_[v], out_ids_.data() + out_begin_[v + 1]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_ids_.data() + in_begin_[v], in_ids_.data() + in_begin_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const { return out_begin_[v + 1] - out_begin_[v]; }

  /// W: the largest absolute edge weight (0 for an edgeless graph).
  Weight max_abs_weight() const { return max_abs_weight_; }

  /// Same topology and owners, new per-edge weights (indexed like edges()).
  GameGraph with_weights(std::span<const Weight> weights) const;

  std::vector<Weight> weights() const;

  friend bool operator==(const GameGraph& a, const GameGraph& b) {
    return a.owners_ == b.owners_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Player> owners_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_begin_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_begin_{0};
  std::vector<EdgeId> in_ids_;
  Weight max_abs_weight_ = 0;
};

struct Violation {
  enum class Kind { SinkNode, SelfLoop, WeightOverflow };
  Kind kind;
  NodeId node = 0;   // SinkNode, SelfLoop
  EdgeId edge = 0;   // SelfLoop
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Largest n^2 * W accepted at load; leaves headroom for reduction weights and sums.
inline constexpr Weight kMaxScaledWeight = Weight{1} << 60;

/// Checks out-degree >= 1, absence of self-loops and n^2 * W <= kMaxScaledWeight.
ValidationReport validate(const GameGraph& graph);

/// Replaces every self-loop (v,v,w) by a fresh node v' (owned by the opponent of
/// v's owner) and edges (v,v',w), (v',v,w). Original node indices are kept; the
/// helper nodes are appended in edge order.
GameGraph eliminate_self_loops(const GameGraph& graph);

}  // namespace egsolve
