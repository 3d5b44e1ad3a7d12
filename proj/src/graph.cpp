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

#include "egsolve/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace egsolve {

GameGraph::GameGraph(std::vector<Player> owners, std::vector<Edge> edges)
    : owners_(std::move(owners)), edges_(std::move(edges)) {
  const std::size_t n = owners_.size();
  out_begin_.assign(n + 1, 0);
  in_begin_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.weight == std::numeric_limits<Weight>::min()) {
      throw std::invalid_argument("edge weight out of range");
    }
    ++out_begin_[e.from + 1];
    ++in_begin_[e.to + 1];
    max_abs_weight_ = std::max(max_abs_weight_, e.weight < 0 ? -e.weight : e.weight);
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_begin_[v + 1] += out_begin_[v];
    in_begin_[v + 1] += in_begin_[v];
  }
  out_ids_.resize(edges_.size());
  in_ids_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<std::size_t> in_fill(in_begin_.begin(), in_begin_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    out_ids_[out_fill[edges_[id].from]++] = id;
    in_ids_[in_fill[edges_[id].to]++] = id;
  }
}

GameGraph GameGraph::with_weights(std::span<const Weight> weights) const {
  if (weights.size() != edges_.size()) {
    throw std::invalid_argument("weight vector size does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (EdgeId id = 0; id < edges.size(); ++id) edges[id].weight = weights[id];
  return GameGraph(owners_, std::move(edges));
}

std::vector<Weight> GameGraph::weights() const {
  std::vector<Weight> w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.weight);
  return w;
}

ValidationReport validate(const GameGraph& graph) {
  ValidationReport report;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (graph.out_degree(v) == 0) {
      report.violations.push_back({Violation::Kind::SinkNode, v, 0,
                                   "sink node " + std::to_string(v) + " has no outgoing edge"});
    }
  }
  for (EdgeId id = 0; id < graph.num_edges(); ++id) {
    const Edge& e = graph.edge(id);
    if (e.from == e.to) {
      report.violations.push_back({Violation::Kind::SelfLoop, e.from, id,
                                   "self-loop (normalize first) at node " + std::to_string(e.from)});
    }
  }
  const auto n = static_cast<__int128>(graph.num_nodes());
  if (n * n * graph.max_abs_weight() > kMaxScaledWeight) {
    report.violations.push_back({Violation::Kind::WeightOverflow, 0, 0,
                                 "n^2 * W exceeds the supported weight range"});
  }
  return report;
}

GameGraph eliminate_self_loops(const GameGraph& graph) {
  std::vector<Player> owners = graph.owners();
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    if (e.from != e.to) {
      edges.push_back(e);
      continue;
    }
    const NodeId helper = owners.size();
    owners.push_back(opponent(graph.owner(e.from)));
    edges.push_back({e.from, helper, e.weight});
    edges.push_back({helper, e.from, e.weight});
  }
  return GameGraph(std::move(owners), std::move(edges));
}

}  // namespace egsolve
