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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "egsolve/admissible.hpp"
#include "egsolve/approx.hpp"
#include "egsolve/core.hpp"
#include "egsolve/exact.hpp"
#include "egsolve/gen.hpp"
#include "egsolve/io.hpp"
#include "egsolve/oracle.hpp"
#include "egsolve/reductions.hpp"
#include "egsolve/viter.hpp"
#include "support.hpp"

using namespace egsolve;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::int64_t bound_of(const GameGraph& g) { return universal_bound(g); }

/// Oracle when the instance fits the default budget, otherwise the exact driver.
EnergyFunction reference(const GameGraph& g) {
  const oracle::Budget budget;
  if (g.num_nodes() <= budget.max_nodes && oracle::strategy_pair_count(g) <= budget.max_strategy_pairs) {
    return oracle::brute_force_energies(g, budget);
  }
  return solve(g).energies;
}

std::multiset<std::int64_t> cycle_weights(const GameGraph& g, const std::vector<bool>& keep) {
  std::multiset<std::int64_t> out;
  for (const auto& cycle : oracle::enumerate_simple_cycles(g)) {
    bool inside = true;
    for (EdgeId id : cycle) inside = inside && keep[g.edge(id).from];
    if (inside) out.insert(testing::cycle_weight(g, cycle));
  }
  return out;
}

/// A ring of total weight -1 (average -1/n) with random heavy chords.
GameGraph low_penalty_game(std::uint64_t seed) {
  SplitMix64 rng(seed + 100000);
  const auto n = static_cast<std::size_t>(rng.uniform(4, 9));
  std::vector<Player> owners(n);
  for (Player& p : owners) p = rng.uniform(0, 1) == 0 ? Player::Alice : Player::Bob;
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, v == 0 ? -1 : 0});
  for (int k = 0; k < 3; ++k) {
    const auto u = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    edges.push_back({u, v >= u ? v + 1 : v, rng.uniform(-40, 40)});
  }
  return GameGraph(std::move(owners), std::move(edges));
}

Outcome criterion1() {
  int agree = 0;
  int total = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const GameGraph g = testing::small_random(seed * 7919, 6, 10);
    const EnergyFunction truth = oracle::brute_force_energies(g);
    const EnergyFunction plain = solve_with_list(g, full_list(bound_of(g))).energies;
    const EnergyFunction exact = solve(g).energies;
    ++total;
    if (plain == truth && exact == truth) ++agree;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) +
                              " instances: full-list value iteration, driver and oracle agree"};
}

Outcome criterion2() {
  const GameGraph g = testing::penalty3_game();
  const oracle::PenaltyReport p = oracle::brute_force_penalty(g);
  const bool penalties = p.per_node == std::vector<Rational>{Rational(3), Rational(3), Rational(3)};
  const EnergyFunction e = solve(g).energies;
  const bool energies = e == testing::energies({0, 4, 8}) &&
                        oracle::brute_force_energies(g) == testing::energies({0, 4, 8});
  const bool verified = verify_minimal(g, e);
  std::ostringstream d;
  d << "penalties (" << p.per_node[0].to_string() << ", " << p.per_node[1].to_string() << ", "
    << p.per_node[2].to_string() << "), energies (" << e[0].to_string() << ", " << e[1].to_string()
    << ", " << e[2].to_string() << "), verified " << (verified ? "yes" : "no");
  return {penalties && energies && verified, d.str()};
}

Outcome criterion3() {
  int band_instances = 0;
  int band_ok = 0;
  int lower_instances = 0;
  int lower_ok = 0;
  for (std::uint64_t seed = 1; band_instances < 200 && seed < 5000; ++seed) {
    const GameGraph g =
        high_penalty_family(1 + seed % 3, 2 + static_cast<Weight>(seed % 15), seed);
    const Rational penalty = oracle::brute_force_penalty(g).graph_penalty();
    const EnergyFunction truth = oracle::brute_force_energies(g);
    const auto n = static_cast<std::int64_t>(g.num_nodes());
    const std::int64_t top =
        penalty.is_infinite() ? bound_of(g) : std::min(bound_of(g), penalty.floor_times(n));
    if (top < n) continue;
    SplitMix64 rng(seed);
    const std::int64_t c = rng.uniform(n, top);
    const Approximation a = approximate_energies(g, bound_of(g), c);
    bool ok = true;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      ok = ok && a.energies[v] <= truth[v] && truth[v] <= a.energies[v] + Energy(c) &&
           a.energies[v].is_finite() == truth[v].is_finite();
    }
    ++band_instances;
    band_ok += ok;
  }
  for (std::uint64_t seed = 1; lower_instances < 200 && seed < 5000; ++seed) {
    const GameGraph g = testing::small_random(seed * 31, 6, 10);
    const Rational penalty = oracle::brute_force_penalty(g).graph_penalty();
    const auto n = static_cast<std::int64_t>(g.num_nodes());
    if (penalty.is_infinite()) continue;
    const std::int64_t c = std::max(n, penalty.floor_times(n) + 1);
    if (c > bound_of(g)) continue;
    const EnergyFunction truth = oracle::brute_force_energies(g);
    const Approximation a = approximate_energies(g, bound_of(g), c);
    bool ok = true;
    for (NodeId v = 0; v < g.num_nodes(); ++v) ok = ok && a.energies[v] <= truth[v];
    ++lower_instances;
    lower_ok += ok;
  }
  std::ostringstream d;
  d << "band holds on " << band_ok << "/" << band_instances
    << " high-penalty instances with n <= c <= nP; lower bound holds on " << lower_ok << "/"
    << lower_instances << " instances with c > nP";
  return {band_instances >= 200 && band_ok == band_instances && lower_instances > 0 &&
              lower_ok == lower_instances,
          d.str()};
}

Outcome criterion4() {
  int total = 0;
  int members = 0;
  int solved = 0;
  for (std::uint64_t seed = 1; total < 200; ++seed) {
    const std::size_t windows = 1 + seed % 2;
    const std::int64_t delta = static_cast<std::int64_t>(seed % 3);
    const std::size_t n = 2 + seed % 4;
    const std::size_t m = std::min(n * (n - 1), n + seed % 4);
    const GeneratedGame game = windowed_game(windows, delta, -8, 8, n, m, seed);
    const GameGraph& g = game.graph;
    if (g.max_abs_weight() == 0) continue;
    const AdmissibleList list = window_list(game.centers, delta, g.num_nodes(), bound_of(g));
    const EnergyFunction truth = oracle::brute_force_energies(g);
    bool in_list = true;
    for (Energy e : truth) in_list = in_list && list.contains(e);
    ++total;
    members += in_list;
    solved += solve_with_list(g, list).energies == truth;
  }
  std::ostringstream d;
  d << "oracle energies in the window list on " << members << "/" << total
    << ", window-list value iteration equals the oracle on " << solved << "/" << total;
  return {members == total && solved == total, d.str()};
}

Outcome criterion5() {
  std::map<std::string, std::pair<int, int>> per_family;  // verified, total
  int failed_guess_instances = 0;
  auto check = [&](const std::string& family, const GameGraph& g) {
    const SolveReport r = solve(g);
    auto& [ok, total] = per_family[family];
    ++total;
    ok += verify_minimal(g, r.energies);
    const bool early_failure =
        std::any_of(r.guesses.begin(), r.guesses.end(), [](const GuessRecord& x) { return !x.verified; });
    failed_guess_instances += early_failure;
  };
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    check("random", testing::small_random(seed * 13, 6, 10));
    GenSpec big;
    big.n = 8 + seed % 30;
    big.m = big.n * 2;
    big.max_weight = 50;
    big.seed = seed;
    check("random-large", random_game(big));
    check("penalty", high_penalty_family(1 + seed % 12, 2 + static_cast<Weight>(seed * 37 % 1000), seed));
    const std::size_t wn = 3 + seed % 10;
    check("window", windowed_game(1 + seed % 2, static_cast<std::int64_t>(seed % 3), -8, 8, wn,
                                  2 * wn, seed).graph);
    GenSpec mult = big;
    mult.family = Family::Multiples;
    mult.step = 1 + static_cast<std::int64_t>(seed % 7);
    check("multiples", multiples_game(mult));
    check("low-penalty", low_penalty_game(seed));
  }
  check("low-penalty", parse_game_string(
                           "p eg 5 7\nv 0 B\nv 1 B\nv 2 B\nv 3 A\nv 4 A\n"
                           "e 0 4 -6\ne 1 3 16\ne 2 1 -16\ne 3 2 11\ne 4 0 4\ne 3 0 -2\ne 4 2 -14\n"));
  bool pass = failed_guess_instances > 0;
  std::ostringstream d;
  for (const auto& [family, counts] : per_family) {
    d << family << " " << counts.first << "/" << counts.second << "; ";
    pass = pass && counts.first == counts.second;
  }
  d << failed_guess_instances << " instances had at least one rejected guess";
  return {pass, d.str()};
}

Outcome criterion6() {
  const std::size_t branches = 8;
  const std::uint64_t seed = 7;
  std::vector<std::uint64_t> baseline;
  std::vector<std::uint64_t> exact;
  std::ostringstream d;
  for (int exponent : {4, 8, 12, 16}) {
    const GameGraph g = high_penalty_family(branches, Weight{1} << exponent, seed);
    baseline.push_back(solve_with_list(g, full_list(bound_of(g))).stats.total_updates);
    exact.push_back(solve(g).total_updates);
    d << "W=2^" << exponent << ": baseline " << baseline.back() << ", driver " << exact.back() << "; ";
  }
  const double last_step = static_cast<double>(baseline[3]) / static_cast<double>(std::max<std::uint64_t>(baseline[2], 1));
  const double spread = static_cast<double>(*std::max_element(exact.begin(), exact.end())) /
                        static_cast<double>(std::max<std::uint64_t>(*std::min_element(exact.begin(), exact.end()), 1));
  d << "baseline last-step ratio " << last_step << " (need >= 8), driver spread " << spread
    << " (need <= 2)";
  return {last_step >= 8.0 && spread <= 2.0, d.str()};
}

Outcome criterion7() {
  int a_total = 0, a_ok = 0, b_total = 0, b_ok = 0, c_total = 0, c_ok = 0;
  oracle::Budget wide;
  wide.max_nodes = 16;
  for (std::uint64_t seed = 1; a_total < 200; ++seed) {
    const GameGraph g = testing::small_random(seed * 101, 4, 8);
    const EnergyFunction before = oracle::brute_force_energies(g);
    const NodeId s = seed % g.num_nodes();

    const WinEverywhere w = to_win_everywhere(g, s);
    const EnergyFunction after = reference(w.graph);
    bool uniform = true;
    for (Energy x : after) uniform = uniform && x.is_finite() == after[s].is_finite();
    ++a_total;
    a_ok += uniform && after[s].is_finite() == before[s].is_finite();

    const Reduced b = to_bipartite(g);
    EnergyFunction split = reference(b.graph);
    split.resize(g.num_nodes());
    ++b_total;
    b_ok += is_bipartite(b.graph) && split == before;
  }
  for (std::uint64_t seed = 1; c_total < 200; ++seed) {
    SplitMix64 rng(seed);
    GenSpec spec;
    spec.n = static_cast<std::size_t>(rng.uniform(2, 3));
    spec.m = spec.n;
    spec.max_weight = rng.uniform(1, 5);
    spec.seed = seed * 17;
    const GameGraph g = random_game(spec);
    const NodeId s = static_cast<NodeId>(rng.uniform(0, static_cast<std::int64_t>(spec.n) - 1));
    const WinEverywhere w = to_win_everywhere(g, s);
    const Reduced b = to_bipartite(w.graph);
    if (b.graph.num_nodes() > wide.max_nodes) continue;
    const Reduced c = to_complete_bipartite(b.graph);
    const bool alice_at_s = oracle::brute_force_energies(g)[s].is_finite();
    const EnergyFunction out = solve(c.graph).energies;
    bool same = true;
    for (Energy x : out) same = same && x.is_finite() == alice_at_s;
    const bool no_partition = !oracle::find_ergodic_partition(c.graph, wide).has_value();
    ++c_total;
    c_ok += is_complete_bipartite(c.graph) && no_partition && same;
  }
  std::ostringstream d;
  d << "(a) " << a_ok << "/" << a_total << ", (b) " << b_ok << "/" << b_total << ", (c) " << c_ok
    << "/" << c_total;
  return {a_ok == a_total && b_ok == b_total && c_ok == c_total, d.str()};
}

Outcome criterion8() {
  int class_cycles = 0, class_ok = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Weight w = 2 + static_cast<Weight>(seed % 40);
    const GameGraph g = high_penalty_family(1 + seed % 3, w, seed);
    for (const auto& cycle : oracle::enumerate_simple_cycles(g)) {
      const std::int64_t total = testing::cycle_weight(g, cycle);
      ++class_cycles;
      class_ok += total > 0 || 2 * total <= -w * static_cast<std::int64_t>(cycle.size());
    }
  }

  int invariance_graphs = 0, invariance_ok = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const GameGraph g = testing::small_random(seed * 53, 6, 10);
    const EnergyFunction e = oracle::brute_force_energies(g);
    std::vector<bool> finite(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) finite[v] = e[v].is_finite();
    const PotentialTransform t = apply_potential(g, e);
    const std::vector<bool> all(t.graph.num_nodes(), true);
    ++invariance_graphs;
    invariance_ok += cycle_weights(g, finite) == cycle_weights(t.graph, all);
  }

  int rounded_cycles = 0, rounded_ok = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const GameGraph g = testing::small_random(seed * 97, 6, 12);
    for (std::int64_t step = 1; step <= 6; ++step) {
      const GameGraph r = round_weights(g, step).graph;
      for (const auto& cycle : oracle::enumerate_simple_cycles(g)) {
        if (testing::cycle_weight(g, cycle) > -step * static_cast<std::int64_t>(cycle.size())) continue;
        ++rounded_cycles;
        rounded_ok += testing::cycle_weight(r, cycle) < 0;
      }
    }
  }
  std::ostringstream d;
  d << "cycle classes " << class_ok << "/" << class_cycles << ", cycle invariance " << invariance_ok
    << "/" << invariance_graphs << " graphs, rounded negativity " << rounded_ok << "/" << rounded_cycles;
  return {class_ok == class_cycles && invariance_ok == invariance_graphs &&
              rounded_ok == rounded_cycles && rounded_cycles > 0,
          d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", criterion1},     {"2 penalty-3 example", criterion2},
      {"3 approximation band", criterion3},     {"4 fixed-window lists", criterion4},
      {"5 driver soundness", criterion5},       {"6 scaling separation", criterion6},
      {"7 reduction correctness", criterion7},  {"8 structural properties", criterion8}};
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto started = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("%s criterion %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
