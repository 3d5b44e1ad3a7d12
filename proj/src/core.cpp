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

#include "egsolve/core.hpp"

#include <algorithm>
#include <string>

#include "egsolve/admissible.hpp"
#include "egsolve/viter.hpp"

namespace egsolve {

namespace {

bool satisfies_equations(const GameGraph& graph, const EnergyFunction& e) {
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    const bool alice = graph.owner(u) == Player::Alice;
    auto out = graph.out_edges(u);
    if (out.empty()) return false;
    Energy best = alice ? Energy::infinity() : Energy(0);
    for (EdgeId id : out) {
      const Edge& edge = graph.edge(id);
      const Energy need = edge_requirement(e[edge.to], edge.weight);
      best = alice ? std::min(best, need) : std::max(best, need);
    }
    if (best != e[u]) return false;
  }
  return true;
}

bool tight(const Edge& edge, const EnergyFunction& e) {
  return e[edge.to].is_finite() && e[edge.from].is_finite() &&
         static_cast<__int128>(e[edge.to].value()) - edge.weight == e[edge.from].value();
}

// Every finite positive node must be reached from the zero nodes backwards along
// tight edges: Bob through some tight edge, Alice through all of them.
bool finite_part_justified(const GameGraph& graph, const EnergyFunction& e) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<EdgeId>> tight_in(n);
  std::vector<std::size_t> missing(n, 0);
  std::vector<bool> done(n, false);
  std::vector<NodeId> stack;
  for (NodeId u = 0; u < n; ++u) {
    if (e[u].is_infinite()) continue;
    if (e[u].value() == 0) {
      done[u] = true;
      stack.push_back(u);
      continue;
    }
    for (EdgeId id : graph.out_edges(u)) {
      const Edge& edge = graph.edge(id);
      if (!tight(edge, e)) continue;
      tight_in[edge.to].push_back(id);
      ++missing[u];
    }
    if (graph.owner(u) == Player::Bob) missing[u] = std::min<std::size_t>(missing[u], 1);
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId id : tight_in[v]) {
      const NodeId u = graph.edge(id).from;
      if (done[u] || --missing[u] > 0) continue;
      done[u] = true;
      stack.push_back(u);
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    if (e[u].is_finite() && !done[u]) return false;
  }
  return true;
}

// Bob must win everywhere in the subgame on {e = inf}; Alice cannot leave it
// once the equations hold, and Bob leaving it only helps Alice.
bool infinite_part_losing(const GameGraph& graph, const EnergyFunction& e) {
  std::vector<NodeId> index(graph.num_nodes(), graph.num_nodes());
  std::vector<Player> owners;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (e[v].is_infinite()) {
      index[v] = owners.size();
      owners.push_back(graph.owner(v));
    }
  }
  if (owners.empty()) return true;
  std::vector<Edge> edges;
  for (const Edge& edge : graph.edges()) {
    if (e[edge.from].is_infinite() && e[edge.to].is_infinite()) {
      edges.push_back({index[edge.from], index[edge.to], edge.weight});
    }
  }
  const GameGraph sub(std::move(owners), std::move(edges));
  std::int64_t bound = 0;
  if (__builtin_mul_overflow(static_cast<std::int64_t>(sub.num_nodes()), sub.max_abs_weight(),
                             &bound)) {
    throw std::overflow_error("n * W overflows");
  }
  const EnergyFunction sub_e = solve_with_list(sub, full_list(bound)).energies;
  return std::all_of(sub_e.begin(), sub_e.end(), [](Energy x) { return x.is_infinite(); });
}

}  // namespace

bool verify_minimal(const GameGraph& graph, const EnergyFunction& e, InfinityCheck infinity) {
  if (e.size() != graph.num_nodes()) return false;
  if (!satisfies_equations(graph, e)) return false;
  if (!finite_part_justified(graph, e)) return false;
  return infinity == InfinityCheck::Trusted || infinite_part_losing(graph, e);
}

bool check_progress_conditions(const GameGraph& graph, const EnergyFunction& e) {
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    auto out = graph.out_edges(u);
    auto ok = [&](EdgeId id) {
      const Edge& edge = graph.edge(id);
      return edge_satisfied(e[u], edge.weight, e[edge.to]);
    };
    const bool holds = graph.owner(u) == Player::Alice ? std::any_of(out.begin(), out.end(), ok)
                                                       : std::all_of(out.begin(), out.end(), ok);
    if (!holds) return false;
  }
  return true;
}

PotentialTransform apply_potential(const GameGraph& graph, const EnergyFunction& e) {
  if (e.size() != graph.num_nodes()) {
    throw std::invalid_argument("energy function size does not match graph");
  }
  PotentialTransform result;
  std::vector<NodeId> index(graph.num_nodes(), graph.num_nodes());
  std::vector<Player> owners;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (e[v].is_finite()) {
      index[v] = result.origin.size();
      result.origin.push_back(v);
      result.offset.push_back(e[v].value());
      owners.push_back(graph.owner(v));
    }
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> kept(result.origin.size(), 0);
  for (const Edge& edge : graph.edges()) {
    if (e[edge.from].is_infinite()) continue;
    if (e[edge.to].is_infinite()) {
      if (graph.owner(edge.from) == Player::Bob) {
        throw PotentialContractError("finite Bob node " + std::to_string(edge.from) +
                                     " has an edge into infinite node " + std::to_string(edge.to));
      }
      continue;
    }
    Weight shifted = 0;
    if (__builtin_add_overflow(edge.weight, e[edge.from].value() - e[edge.to].value(), &shifted)) {
      throw std::overflow_error("potential transformation overflow");
    }
    edges.push_back({index[edge.from], index[edge.to], shifted});
    ++kept[index[edge.from]];
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] == 0) {
      throw PotentialContractError("finite node " + std::to_string(result.origin[i]) +
                                   " has no finite successor");
    }
  }
  result.graph = GameGraph(std::move(owners), std::move(edges));
  return result;
}

}  // namespace egsolve
