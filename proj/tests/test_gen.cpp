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

#include <set>

#include "doctest.h"
#include "egsolve/gen.hpp"
#include "egsolve/io.hpp"
#include "egsolve/oracle.hpp"
#include "support.hpp"

using namespace egsolve;

TEST_CASE("splitmix64 reference outputs") {
  // Seed 0 stream of the standard SplitMix64 generator.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("uniform stays in range and hits every value") {
  SplitMix64 rng(42);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t x = rng.uniform(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(rng.uniform(5, 5) == 5);
  CHECK_THROWS(rng.uniform(2, 1));
}

TEST_CASE("random games are deterministic and valid") {
  GenSpec spec;
  spec.n = 4;
  spec.m = 8;
  spec.max_weight = 5;
  spec.seed = 1;
  const GameGraph a = random_game(spec);
  CHECK(a == random_game(spec));
  CHECK(format_game(a) == format_game(random_game(spec)));
  CHECK(a.num_edges() == 8);
  CHECK(validate(a).ok());
  spec.seed = 2;
  CHECK_FALSE(a == random_game(spec));
}

TEST_CASE("random game constraints") {
  GenSpec spec;
  spec.n = 1;
  spec.m = 1;
  CHECK_THROWS_AS(random_game(spec), std::invalid_argument);
  spec.n = 4;
  spec.m = 3;
  CHECK_THROWS_AS(random_game(spec), std::invalid_argument);
  spec.m = 13;
  CHECK_THROWS_AS(random_game(spec), std::invalid_argument);
  spec.m = 12;
  CHECK(random_game(spec).num_edges() == 12);
  spec.max_out_degree = 2;
  CHECK_THROWS_AS(random_game(spec), std::invalid_argument);
}

TEST_CASE("random games have no self-loops, no parallel edges, weights in range") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.n = 2 + seed % 7;
    spec.m = spec.n + seed % (spec.n * (spec.n - 1) - spec.n + 1);
    spec.max_weight = 1 + static_cast<Weight>(seed % 20);
    spec.max_out_degree = seed % 2 == 0 ? 0 : spec.n - 1;
    spec.seed = seed;
    const GameGraph g = random_game(spec);
    CHECK(validate(g).ok());
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const Edge& e : g.edges()) {
      CHECK(e.from != e.to);
      CHECK(pairs.insert({e.from, e.to}).second);
      CHECK(e.weight >= -spec.max_weight);
      CHECK(e.weight <= spec.max_weight);
    }
  }
}

TEST_CASE("out-degree cap is respected") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GameGraph g = testing::small_random(seed, 6, 10);
    for (NodeId v = 0; v < g.num_nodes(); ++v) CHECK(g.out_degree(v) <= 3);
  }
}

TEST_CASE("high-penalty family cycle classes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Weight w = 2 + static_cast<Weight>(seed % 30);
    const GameGraph g = high_penalty_family(1 + seed % 3, w, seed);
    CHECK(validate(g).ok());
    CHECK(g.max_abs_weight() <= w);
    bool any_positive = false;
    for (const auto& cycle : oracle::enumerate_simple_cycles(g)) {
      const std::int64_t total = testing::cycle_weight(g, cycle);
      const auto len = static_cast<std::int64_t>(cycle.size());
      CHECK((total > 0 || 2 * total <= -w * len));
      any_positive = any_positive || total > 0;
    }
    CHECK(any_positive);
  }
}

TEST_CASE("high-penalty family penalty is at least W/2 or infinite") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GameGraph g = high_penalty_family(2, 8, seed);
    const Rational p = oracle::brute_force_penalty(g).graph_penalty();
    CHECK(Rational(4) <= p);
  }
}

TEST_CASE("high-penalty family keeps topology across a W sweep") {
  const GameGraph small = high_penalty_family(4, 8, 11);
  for (Weight w : {64, 512}) {
    const GameGraph big = high_penalty_family(4, w, 11);
    REQUIRE(big.num_edges() == small.num_edges());
    CHECK(big.owners() == small.owners());
    for (EdgeId i = 0; i < big.num_edges(); ++i) {
      CHECK(big.edge(i).from == small.edge(i).from);
      CHECK(big.edge(i).to == small.edge(i).to);
    }
    // Branch totals keep their sign.
    for (std::size_t b = 0; b < 4; ++b) {
      const std::int64_t ts = small.edge(3 * b).weight + small.edge(3 * b + 1).weight +
                              small.edge(3 * b + 2).weight;
      const std::int64_t tb = big.edge(3 * b).weight + big.edge(3 * b + 1).weight +
                              big.edge(3 * b + 2).weight;
      CHECK((ts > 0) == (tb > 0));
    }
  }
}

TEST_CASE("windowed games") {
  const GeneratedGame flat = windowed_game(1, 0, -5, 5, 5, 9, 3);
  REQUIRE(flat.centers.size() == 1);
  for (const Edge& e : flat.graph.edges()) CHECK(e.weight == flat.centers[0]);

  const GeneratedGame a = windowed_game(2, 1, -8, 8, 5, 10, 9);
  const GeneratedGame b = windowed_game(2, 1, -8, 8, 5, 10, 9);
  CHECK(a.graph == b.graph);
  CHECK(a.centers == b.centers);
  for (const Edge& e : a.graph.edges()) {
    bool near = false;
    for (Weight c : a.centers) near = near || (e.weight >= c - 1 && e.weight <= c + 1);
    CHECK(near);
  }
}

TEST_CASE("multiples family") {
  GenSpec spec;
  spec.family = Family::Multiples;
  spec.n = 5;
  spec.m = 10;
  spec.max_weight = 20;
  spec.step = 4;
  spec.seed = 5;
  const GameGraph g = generate(spec).graph;
  for (const Edge& e : g.edges()) {
    CHECK(e.weight % 4 == 0);
    CHECK(std::abs(e.weight) <= 20);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Random, Family::Penalty, Family::Window, Family::Multiples}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_THROWS(parse_family("other"));
}
