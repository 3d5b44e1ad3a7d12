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

#include "egsolve/viter.hpp"

#include <chrono>
#include <deque>
#include <stdexcept>
#include <string>

#include "egsolve/core.hpp"

namespace egsolve {
namespace {

/// e(v) - w before rounding; may be negative or infinite.
struct Requirement {
  bool infinite = false;
  __int128 value = 0;

  friend bool operator<(const Requirement& a, const Requirement& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
};

Requirement requirement(Energy target, Weight w) {
  if (target.is_infinite()) return {true, 0};
  return {false, static_cast<__int128>(target.value()) - w};
}

Energy round_up(const AdmissibleList& list, const Requirement& r) {
  if (r.infinite) return Energy::infinity();
  if (r.value > std::numeric_limits<std::int64_t>::max() / 2) return Energy::infinity();
  if (r.value < std::numeric_limits<std::int64_t>::min() / 2) return list.front();
  return list.round_up(static_cast<std::int64_t>(r.value));
}

std::int64_t satisfied_out_edges(const GameGraph& graph, const EnergyFunction& e, NodeId u) {
  std::int64_t count = 0;
  for (EdgeId id : graph.out_edges(u)) {
    const Edge& edge = graph.edge(id);
    if (edge_satisfied(e[u], edge.weight, e[edge.to])) ++count;
  }
  return count;
}

}  // namespace

ViterResult solve_with_list(const GameGraph& graph, const AdmissibleList& list,
                            const ViterOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = graph.num_nodes();
  ViterResult result;
  EnergyFunction& e = result.energies;
  ViterStats& stats = result.stats;
  e.assign(n, list.front());
  stats.updates_per_node.assign(n, 0);
  stats.edge_work = graph.num_edges();

  std::vector<std::int64_t> count(n, 0);
  std::vector<bool> pending(n, false);
  std::deque<NodeId> queue;
  auto push = [&](NodeId v) {
    if (!pending[v]) {
      pending[v] = true;
      queue.push_back(v);
    }
  };

  for (NodeId u = 0; u < n; ++u) {
    if (graph.out_degree(u) == 0) {
      throw std::invalid_argument("sink node " + std::to_string(u));
    }
    const std::int64_t satisfied = satisfied_out_edges(graph, e, u);
    const auto degree = static_cast<std::int64_t>(graph.out_degree(u));
    if (graph.owner(u) == Player::Alice) {
      if (satisfied == 0) {
        push(u);
      } else {
        count[u] = satisfied;
      }
    } else if (satisfied < degree) {
      push(u);
    }
  }

  while (!queue.empty()) {
    NodeId u = 0;
    if (options.order == PendingOrder::Fifo) {
      u = queue.front();
      queue.pop_front();
    } else {
      u = queue.back();
      queue.pop_back();
    }
    pending[u] = false;
    const Energy old = e[u];
    const bool alice = graph.owner(u) == Player::Alice;

    auto out = graph.out_edges(u);
    Requirement need = requirement(e[graph.edge(out[0]).to], graph.edge(out[0]).weight);
    for (EdgeId id : out.subspan(1)) {
      const Requirement r = requirement(e[graph.edge(id).to], graph.edge(id).weight);
      if (alice ? r < need : need < r) need = r;
    }
    e[u] = round_up(list, need);
    if (!(old < e[u])) {
      throw std::logic_error("value iteration made no progress at node " + std::to_string(u));
    }
    ++stats.updates_per_node[u];
    ++stats.total_updates;
    stats.edge_work += graph.out_degree(u) + graph.in_edges(u).size();

    if (alice) count[u] = satisfied_out_edges(graph, e, u);

    for (EdgeId id : graph.in_edges(u)) {
      const Edge& edge = graph.edge(id);
      const NodeId t = edge.from;
      if (edge_satisfied(e[t], edge.weight, e[u])) continue;
      if (graph.owner(t) == Player::Alice) {
        if (edge_satisfied(e[t], edge.weight, old)) --count[t];
        if (count[t] <= 0) push(t);
      } else {
        push(t);
      }
    }

    if (options.check_counters) {
      for (NodeId v = 0; v < n; ++v) {
        if (graph.owner(v) == Player::Alice && !pending[v] &&
            count[v] != satisfied_out_edges(graph, e, v)) {
          throw std::logic_error("stale counter at node " + std::to_string(v));
        }
      }
    }
    if (options.on_update) options.on_update(u, e);
  }

  stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace egsolve
