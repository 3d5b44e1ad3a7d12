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

#include "egsolve/gen.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace egsolve {
namespace {

/// Resolution of the scale-free fractions used by the penalty family.
constexpr std::int64_t kResolution = 1 << 10;

struct Topology {
  std::vector<Player> owners;
  std::vector<std::pair<NodeId, NodeId>> pairs;
};

Topology random_topology(SplitMix64& rng, std::size_t n, std::size_t m, int alice_percent,
                         std::size_t max_out_degree) {
  if (n < 2) throw std::invalid_argument("random games need at least 2 nodes");
  if (m < n) throw std::invalid_argument("m must be at least n");
  const std::size_t cap = max_out_degree == 0 ? n - 1 : std::min(max_out_degree, n - 1);
  if (m > n * cap) throw std::invalid_argument("m exceeds the available edge slots");

  Topology t;
  t.owners.resize(n);
  for (Player& p : t.owners) p = rng.uniform(0, 99) < alice_percent ? Player::Alice : Player::Bob;

  std::vector<bool> present(n * n, false);
  std::vector<std::size_t> degree(n, 0);
  auto add = [&](NodeId u, NodeId v) {
    present[u * n + v] = true;
    ++degree[u];
    t.pairs.emplace_back(u, v);
  };
  auto slot_free = [&](NodeId u, NodeId v) {
    return u != v && !present[u * n + v] && degree[u] < cap;
  };

  for (NodeId u = 0; u < n; ++u) {
    auto v = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (v >= u) ++v;
    add(u, v);
  }
  while (t.pairs.size() < m) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      const auto u = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      const auto v = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      if (slot_free(u, v)) {
        add(u, v);
        placed = true;
      }
    }
    if (placed) continue;
    std::vector<std::pair<NodeId, NodeId>> open;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (slot_free(u, v)) open.emplace_back(u, v);
      }
    }
    const auto pick = open[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(open.size()) - 1))];
    add(pick.first, pick.second);
  }
  return t;
}

GameGraph assemble(const Topology& t, const std::function<Weight()>& draw_weight) {
  std::vector<Edge> edges;
  edges.reserve(t.pairs.size());
  for (const auto& [u, v] : t.pairs) edges.push_back({u, v, draw_weight()});
  return GameGraph(t.owners, std::move(edges));
}

/// lo + floor(f * (hi - lo) / kResolution) for f in [0, kResolution].
Weight scaled(Weight lo, Weight hi, std::int64_t f) {
  return lo + static_cast<Weight>(static_cast<__int128>(hi - lo) * f / kResolution);
}

}  // namespace

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

Family parse_family(const std::string& name) {
  if (name == "random") return Family::Random;
  if (name == "penalty") return Family::Penalty;
  if (name == "window") return Family::Window;
  if (name == "multiples") return Family::Multiples;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Random: return "random";
    case Family::Penalty: return "penalty";
    case Family::Window: return "window";
    case Family::Multiples: return "multiples";
  }
  return "random";
}

GameGraph random_game(const GenSpec& spec) {
  if (spec.max_weight < 1) throw std::invalid_argument("W must be at least 1");
  SplitMix64 rng(spec.seed);
  const Topology t = random_topology(rng, spec.n, spec.m, spec.alice_percent, spec.max_out_degree);
  return assemble(t, [&] { return rng.uniform(-spec.max_weight, spec.max_weight); });
}

GameGraph high_penalty_family(std::size_t branches, Weight scale, std::uint64_t seed) {
  if (scale < 2) throw std::invalid_argument("W must be at least 2");
  if (branches < 1) throw std::invalid_argument("need at least one branch");
  SplitMix64 rng(seed);

  std::vector<bool> positive(branches);
  for (std::size_t i = 0; i < branches; ++i) positive[i] = rng.uniform(0, 1) == 1;
  if (std::none_of(positive.begin(), positive.end(), [](bool b) { return b; })) {
    positive[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(branches) - 1))] =
        true;
  }

  const Weight w = scale;
  const Weight reach = 3 * w;
  const Weight strong = (reach + 1) / 2;
  std::vector<Player> owners(1 + 2 * branches, Player::Bob);
  owners[0] = Player::Alice;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < branches; ++i) {
    const std::int64_t f_total = rng.uniform(0, kResolution);
    const std::int64_t f_first = rng.uniform(0, kResolution);
    const std::int64_t f_second = rng.uniform(0, kResolution);
    const Weight total = positive[i] ? scaled(1, reach, f_total) : -scaled(strong, reach, f_total);

    const Weight lo1 = std::max(-w, total - 2 * w);
    const Weight hi1 = std::min(w, total + 2 * w);
    const Weight w1 = scaled(lo1, hi1, f_first);
    const Weight rest = total - w1;
    const Weight lo2 = std::max(-w, rest - w);
    const Weight hi2 = std::min(w, rest + w);
    const Weight w2 = scaled(lo2, hi2, f_second);
    const Weight w3 = rest - w2;

    const NodeId x = 1 + 2 * i;
    const NodeId y = x + 1;
    edges.push_back({0, x, w1});
    edges.push_back({x, y, w2});
    edges.push_back({y, 0, w3});
  }
  return GameGraph(std::move(owners), std::move(edges));
}

GeneratedGame windowed_game(std::size_t windows, std::int64_t delta, Weight center_lo,
                            Weight center_hi, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (windows < 1) throw std::invalid_argument("need at least one window");
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  SplitMix64 rng(seed);
  GeneratedGame out;
  for (std::size_t i = 0; i < windows; ++i) out.centers.push_back(rng.uniform(center_lo, center_hi));
  const Topology t = random_topology(rng, n, m, 50, 0);
  out.graph = assemble(t, [&] {
    const Weight c = out.centers[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(windows) - 1))];
    return c + rng.uniform(-delta, delta);
  });
  return out;
}

GameGraph multiples_game(const GenSpec& spec) {
  if (spec.step < 1) throw std::invalid_argument("step must be at least 1");
  SplitMix64 rng(spec.seed);
  const Topology t = random_topology(rng, spec.n, spec.m, spec.alice_percent, spec.max_out_degree);
  const std::int64_t k = spec.max_weight / spec.step;
  return assemble(t, [&] { return spec.step * rng.uniform(-k, k); });
}

GeneratedGame generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Random: return {random_game(spec), {}};
    case Family::Penalty: return {high_penalty_family(spec.branches, spec.max_weight, spec.seed), {}};
    case Family::Window:
      return windowed_game(spec.windows, spec.delta, spec.center_lo, spec.center_hi, spec.n, spec.m,
                           spec.seed);
    case Family::Multiples: return {multiples_game(spec), {}};
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace egsolve
