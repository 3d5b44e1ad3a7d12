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

#include "egsolve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace egsolve::oracle {
namespace {

struct Lasso {
  Weight min_prefix = 0;   // over the simple path from s (empty prefix included)
  Weight cycle_weight = 0;
  std::size_t cycle_length = 0;
};

Lasso walk(const GameGraph& graph, const std::vector<EdgeId>& choice, NodeId s) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::size_t> position(n, n + 1);
  std::vector<Weight> prefix;  // prefix[i] = weight of the first i edges
  prefix.reserve(n + 1);
  prefix.push_back(0);
  Lasso lasso;
  NodeId v = s;
  for (std::size_t step = 0;; ++step) {
    position[v] = step;
    const Edge& e = graph.edge(choice[v]);
    prefix.push_back(prefix.back() + e.weight);
    v = e.to;
    if (position[v] <= n) {
      const std::size_t entry = position[v];
      lasso.cycle_weight = prefix.back() - prefix[entry];
      lasso.cycle_length = step + 1 - entry;
      // Prefixes 0..step end at distinct nodes; the closing prefix is not a simple path.
      lasso.min_prefix = *std::min_element(prefix.begin(), prefix.end() - 1);
      return lasso;
    }
  }
}

Energy lasso_energy(const Lasso& lasso) {
  if (lasso.cycle_weight < 0) return Energy::infinity();
  return Energy(lasso.min_prefix < 0 ? -lasso.min_prefix : 0);
}

void check_budget(const GameGraph& graph, const Budget& budget) {
  if (graph.num_nodes() > budget.max_nodes) {
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(graph.num_nodes()) +
                         " nodes > " + std::to_string(budget.max_nodes));
  }
  const std::uint64_t pairs = strategy_pair_count(graph);
  if (pairs > budget.max_strategy_pairs) {
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(pairs) +
                         " strategy pairs > " + std::to_string(budget.max_strategy_pairs));
  }
}

std::vector<NodeId> nodes_of(const GameGraph& graph, Player p) {
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (graph.owner(v) == p) nodes.push_back(v);
  }
  return nodes;
}

/// Calls visit() for every strategy of the given nodes, lexicographically by node
/// index then successor index (the last listed node varies fastest).
void for_each_strategy(const GameGraph& graph, const std::vector<NodeId>& nodes,
                       std::vector<EdgeId>& choice, const std::function<void()>& visit) {
  std::vector<std::size_t> digit(nodes.size(), 0);
  for (NodeId v : nodes) choice[v] = graph.out_edges(v)[0];
  while (true) {
    visit();
    std::size_t i = nodes.size();
    while (i > 0) {
      --i;
      const NodeId v = nodes[i];
      if (++digit[i] < graph.out_degree(v)) {
        choice[v] = graph.out_edges(v)[digit[i]];
        break;
      }
      digit[i] = 0;
      choice[v] = graph.out_edges(v)[0];
      if (i == 0) return;
    }
    if (nodes.empty()) return;
  }
}

template <class T>
T min_of(const std::vector<T>& values, T init) {
  for (const T& v : values) init = std::min(init, v);
  return init;
}

}  // namespace

Energy eval_pair(const GameGraph& graph, const StrategyPair& pair, NodeId s) {
  return lasso_energy(walk(graph, pair.choice, s));
}

std::uint64_t strategy_pair_count(const GameGraph& graph) {
  std::uint64_t count = 1;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (__builtin_mul_overflow(count, graph.out_degree(v), &count)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return count;
}

EnergyFunction brute_force_energies(const GameGraph& graph, const Budget& budget) {
  check_budget(graph, budget);
  const std::size_t n = graph.num_nodes();
  const auto alice = nodes_of(graph, Player::Alice);
  const auto bob = nodes_of(graph, Player::Bob);
  std::vector<EdgeId> choice(n, 0);
  EnergyFunction best(n, Energy::infinity());
  for_each_strategy(graph, alice, choice, [&] {
    EnergyFunction worst(n, Energy(0));
    for_each_strategy(graph, bob, choice, [&] {
      for (NodeId s = 0; s < n; ++s) {
        worst[s] = std::max(worst[s], lasso_energy(walk(graph, choice, s)));
      }
    });
    for (NodeId s = 0; s < n; ++s) best[s] = std::min(best[s], worst[s]);
  });
  return best;
}

Rational PenaltyReport::graph_penalty() const { return min_of(per_node, Rational::infinity()); }

Rational PenaltyReport::global_graph_penalty() const {
  return min_of(global, Rational::infinity());
}

PenaltyReport brute_force_penalty(const GameGraph& graph, const Budget& budget) {
  const EnergyFunction optimal = brute_force_energies(graph, budget);
  const std::size_t n = graph.num_nodes();
  const auto alice = nodes_of(graph, Player::Alice);
  const auto bob = nodes_of(graph, Player::Bob);

  // Penalties are >= 0, so -1 marks "no optimal tau seen yet".
  PenaltyReport report;
  report.per_node.assign(n, Rational(-1));
  report.global.assign(n, Rational(-1));

  std::vector<EdgeId> choice(n, 0);
  for_each_strategy(graph, bob, choice, [&] {
    EnergyFunction value(n, Energy::infinity());
    std::vector<Rational> bound(n, Rational::infinity());
    for_each_strategy(graph, alice, choice, [&] {
      for (NodeId s = 0; s < n; ++s) {
        const Lasso lasso = walk(graph, choice, s);
        value[s] = std::min(value[s], lasso_energy(lasso));
        if (lasso.cycle_weight < 0) {
          const Rational average_loss(-lasso.cycle_weight,
                                      static_cast<std::int64_t>(lasso.cycle_length));
          bound[s] = std::min(bound[s], average_loss);
        }
      }
    });
    bool optimal_everywhere = true;
    for (NodeId s = 0; s < n; ++s) {
      if (value[s] == optimal[s]) {
        report.per_node[s] = std::max(report.per_node[s], bound[s]);
      } else {
        optimal_everywhere = false;
      }
    }
    if (optimal_everywhere) {
      for (NodeId s = 0; s < n; ++s) report.global[s] = std::max(report.global[s], bound[s]);
    }
  });
  return report;
}

bool is_ergodic_partition(const GameGraph& graph, const std::vector<bool>& in_alice_part) {
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    const bool in_a = in_alice_part[u];
    const bool alice = graph.owner(u) == Player::Alice;
    bool stays = false;
    bool leaves = false;
    for (EdgeId id : graph.out_edges(u)) {
      (in_alice_part[graph.edge(id).to] == in_a ? stays : leaves) = true;
    }
    // S_A: Alice can stay, Bob cannot leave. S_B: Bob can stay, Alice cannot leave.
    if (in_a && alice && !stays) return false;
    if (in_a && !alice && leaves) return false;
    if (!in_a && !alice && !stays) return false;
    if (!in_a && alice && leaves) return false;
  }
  return true;
}

std::optional<ErgodicPartition> find_ergodic_partition(const GameGraph& graph,
                                                       const Budget& budget) {
  const std::size_t n = graph.num_nodes();
  if (n > budget.max_nodes || n >= 63) {
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(n) + " nodes for partition search");
  }
  if (n < 2) return std::nullopt;

  std::vector<std::uint64_t> succ(n, 0);
  std::vector<bool> alice(n);
  for (NodeId u = 0; u < n; ++u) {
    alice[u] = graph.owner(u) == Player::Alice;
    for (EdgeId id : graph.out_edges(u)) succ[u] |= std::uint64_t{1} << graph.edge(id).to;
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool ok = true;
    for (NodeId u = 0; u < n && ok; ++u) {
      const bool in_a = (mask >> u) & 1;
      const std::uint64_t own = in_a ? mask : (full & ~mask);
      const bool stays = (succ[u] & own) != 0;
      const bool leaves = (succ[u] & ~own) != 0;
      if (in_a == alice[u]) {
        ok = stays;    // owner of the block can keep the play inside
      } else {
        ok = !leaves;  // the other player cannot get out
      }
    }
    if (ok) {
      ErgodicPartition partition;
      partition.in_alice_part.resize(n);
      for (NodeId u = 0; u < n; ++u) partition.in_alice_part[u] = (mask >> u) & 1;
      return partition;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const GameGraph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> path;
  for (NodeId start = 0; start < n; ++start) {
    std::function<void(NodeId)> extend = [&](NodeId v) {
      on_path[v] = true;
      for (EdgeId id : graph.out_edges(v)) {
        const NodeId w = graph.edge(id).to;
        if (w == start) {
          path.push_back(id);
          cycles.push_back(path);
          path.pop_back();
        } else if (w > start && !on_path[w]) {
          path.push_back(id);
          extend(w);
          path.pop_back();
        }
      }
      on_path[v] = false;
    };
    extend(start);
  }
  return cycles;
}

}  // namespace egsolve::oracle
