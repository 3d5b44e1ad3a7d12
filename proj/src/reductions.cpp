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

#include "egsolve/reductions.hpp"

#include <sstream>
#include <stdexcept>

namespace egsolve {
namespace {

Weight checked_mul(Weight a, Weight b) {
  Weight r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("reduction weight overflows");
  return r;
}

/// adjacency[u * n + v]: an edge u -> v exists.
std::vector<bool> adjacency(const GameGraph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<bool> present(n * n, false);
  for (const Edge& e : graph.edges()) present[e.from * n + e.to] = true;
  return present;
}

/// Adds every missing edge from an owner-`from` node to an owner-`to` node.
GameGraph complete_direction(const GameGraph& graph, Player from, Player to, Weight weight) {
  const std::size_t n = graph.num_nodes();
  const std::vector<bool> present = adjacency(graph);
  std::vector<Edge> edges = graph.edges();
  for (NodeId u = 0; u < n; ++u) {
    if (graph.owner(u) != from) continue;
    for (NodeId v = 0; v < n; ++v) {
      if (graph.owner(v) == to && !present[u * n + v]) edges.push_back({u, v, weight});
    }
  }
  return GameGraph(graph.owners(), std::move(edges));
}

}  // namespace

WinEverywhere to_win_everywhere(const GameGraph& graph, NodeId start) {
  const std::size_t n = graph.num_nodes();
  if (start >= n) throw std::out_of_range("start node out of range");
  const Weight nw = checked_mul(static_cast<Weight>(n), graph.max_abs_weight());

  WinEverywhere out;
  out.start = start;
  out.trace.step = "winall";
  out.trace.parameters = {{"n", static_cast<std::int64_t>(n)},
                          {"W", graph.max_abs_weight()},
                          {"alice_to_start", -nw},
                          {"bob_to_start", nw}};

  std::vector<Player> owners = graph.owners();
  std::vector<Edge> edges;
  edges.reserve(5 * graph.num_edges());
  for (EdgeId i = 0; i < graph.num_edges(); ++i) {
    const Edge& e = graph.edge(i);
    const NodeId u = owners.size();
    const NodeId v = u + 1;
    owners.push_back(Player::Alice);
    owners.push_back(Player::Bob);
    out.trace.new_nodes.push_back({u, {NodeOrigin::Kind::Edge, i}});
    out.trace.new_nodes.push_back({v, {NodeOrigin::Kind::Edge, i}});
    edges.push_back({e.from, u, e.weight});
    edges.push_back({u, v, 0});
    edges.push_back({v, e.to, 0});
    edges.push_back({u, start, -nw});
    edges.push_back({v, start, nw});
  }
  out.graph = GameGraph(std::move(owners), std::move(edges));
  return out;
}

Reduced to_bipartite(const GameGraph& graph) {
  Reduced out;
  out.trace.step = "bipartite";
  std::vector<Player> owners = graph.owners();
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges());
  for (EdgeId i = 0; i < graph.num_edges(); ++i) {
    const Edge& e = graph.edge(i);
    const Player p = graph.owner(e.from);
    if (p != graph.owner(e.to)) {
      edges.push_back(e);
      continue;
    }
    const NodeId mid = owners.size();
    owners.push_back(opponent(p));
    out.trace.new_nodes.push_back({mid, {NodeOrigin::Kind::Edge, i}});
    edges.push_back({e.from, mid, e.weight});
    edges.push_back({mid, e.to, 0});
  }
  out.trace.parameters = {{"split_edges", static_cast<std::int64_t>(out.trace.new_nodes.size())}};
  out.graph = GameGraph(std::move(owners), std::move(edges));
  return out;
}

Reduced to_complete_bipartite(const GameGraph& graph) {
  if (!is_bipartite(graph)) throw std::invalid_argument("graph is not bipartite");
  Reduced out;
  out.trace.step = "complete";

  const auto n = static_cast<Weight>(graph.num_nodes());
  const Weight w0 = graph.max_abs_weight();
  const Weight alice_weight = -checked_mul(n, w0);
  const GameGraph step1 = complete_direction(graph, Player::Alice, Player::Bob, alice_weight);

  const Weight w1 = step1.max_abs_weight();
  const Weight bob_weight = checked_mul(checked_mul(n, n), w1);
  out.graph = complete_direction(step1, Player::Bob, Player::Alice, bob_weight);

  out.trace.parameters = {{"n", n},
                          {"W_step1", w0},
                          {"alice_to_bob", alice_weight},
                          {"added_alice_to_bob",
                           static_cast<std::int64_t>(step1.num_edges() - graph.num_edges())},
                          {"W_step2", w1},
                          {"bob_to_alice", bob_weight},
                          {"added_bob_to_alice",
                           static_cast<std::int64_t>(out.graph.num_edges() - step1.num_edges())}};
  return out;
}

bool is_bipartite(const GameGraph& graph) {
  for (const Edge& e : graph.edges()) {
    if (graph.owner(e.from) == graph.owner(e.to)) return false;
  }
  return true;
}

bool is_complete_bipartite(const GameGraph& graph) {
  if (!is_bipartite(graph)) return false;
  const std::size_t n = graph.num_nodes();
  const std::vector<bool> present = adjacency(graph);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (graph.owner(u) != graph.owner(v) && !present[u * n + v]) return false;
    }
  }
  return true;
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "# step " << trace.step << '\n';
  for (const auto& [name, value] : trace.parameters) out << "# " << name << ' ' << value << '\n';
  for (const auto& [id, origin] : trace.new_nodes) {
    out << id << " <- " << (origin.kind == NodeOrigin::Kind::Node ? "node " : "edge ")
        << origin.index << '\n';
  }
  return out.str();
}

}  // namespace egsolve
