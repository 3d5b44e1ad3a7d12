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
#include <string>
#include <utility>
#include <vector>

#include "egsolve/graph.hpp"

namespace egsolve {

struct NodeOrigin {
  enum class Kind { Node, Edge };
  Kind kind = Kind::Node;
  /// Input node id or input edge id, depending on kind.
  std::size_t index = 0;
};

/**
 * Provenance of one reduction step. Output nodes below the input node count
 * are the input nodes themselves; every appended node is listed in
 * `new_nodes` in increasing id order.
 */
struct ReductionTrace {
  std::string step;
  std::vector<std::pair<NodeId, NodeOrigin>> new_nodes;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
};

struct WinEverywhere {
  GameGraph graph;
  NodeId start = 0;
  ReductionTrace trace;
};

/**
 * Replaces each edge (x,y) of weight w by an Alice node u and a Bob node v with
 * edges (x,u,w), (u,v,0), (v,y,0), (u,s,-nW), (v,s,nW); n and W are those of the
 * input. The node of edge i is n + 2i (u) and n + 2i + 1 (v).
 */
WinEverywhere to_win_everywhere(const GameGraph& graph, NodeId start);

struct Reduced {
  GameGraph graph;
  ReductionTrace trace;
};

/// Splits every same-owner edge (u,v,w) into (u,u',w), (u',v,0) through a fresh
/// node u' of the other player. Edge order is kept.
Reduced to_bipartite(const GameGraph& graph);

/**
 * Adds every missing Alice-to-Bob edge with weight -nW, then every missing
 * Bob-to-Alice edge with weight n^2 W, reading n and W from the graph as it is
 * before each of the two steps. Throws std::invalid_argument on a same-owner edge.
 */
Reduced to_complete_bipartite(const GameGraph& graph);

bool is_bipartite(const GameGraph& graph);

/// No same-owner edge, and both (a,b) and (b,a) present for every Alice a, Bob b.
bool is_complete_bipartite(const GameGraph& graph);

/// One `new_id <- node k` or `new_id <- edge k` line per appended node,
/// preceded by `# step` and `# name value` parameter comments.
std::string format_trace(const ReductionTrace& trace);

}  // namespace egsolve
