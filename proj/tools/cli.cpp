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

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "egsolve/admissible.hpp"
#include "egsolve/approx.hpp"
#include "egsolve/core.hpp"
#include "egsolve/exact.hpp"
#include "egsolve/gen.hpp"
#include "egsolve/io.hpp"
#include "egsolve/oracle.hpp"
#include "egsolve/reductions.hpp"
#include "egsolve/viter.hpp"
#include "json.hpp"

namespace egsolve::cli {
namespace {

using nlohmann::json;

/// Input invalid after a successful parse (sink node, oversized weights).
class InvalidGame : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A game with self-loops replaced; energies of nodes >= `original` are helpers.
struct Loaded {
  GameGraph graph;
  std::size_t original = 0;
};

Loaded load(const std::string& path) {
  const GameGraph raw = read_game_file(path);
  Loaded loaded{eliminate_self_loops(raw), raw.num_nodes()};
  const ValidationReport report = validate(loaded.graph);
  if (!report.ok()) throw InvalidGame(path + ": " + report.violations.front().message);
  return loaded;
}

EnergyFunction restrict(EnergyFunction e, std::size_t original) {
  e.resize(std::min(e.size(), original));
  return e;
}

/// Values of the self-loop helpers, each of which has exactly one out-edge.
EnergyFunction extend_to_helpers(const GameGraph& graph, EnergyFunction e) {
  const std::size_t original = e.size();
  e.resize(graph.num_nodes(), Energy(0));
  for (NodeId v = original; v < graph.num_nodes(); ++v) {
    const Edge& edge = graph.edge(graph.out_edges(v)[0]);
    e[v] = edge_requirement(e[edge.to], edge.weight);
  }
  return e;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

json report_json(const SolveReport& report, std::size_t original) {
  json guesses = json::array();
  std::size_t max_depth = 0;
  for (const GuessRecord& g : report.guesses) {
    max_depth = std::max(max_depth, g.stats.depth);
    guesses.push_back({{"c", g.scaled_guess},
                       {"D", g.penalty_guess.to_string()},
                       {"verified", g.verified},
                       {"contract_violation", g.contract_violation},
                       {"depth", g.stats.depth},
                       {"phase_updates", g.stats.phase_updates},
                       {"updates", g.stats.total_updates}});
  }
  json energies = json::array();
  for (std::size_t v = 0; v < original && v < report.energies.size(); ++v) {
    energies.push_back(report.energies[v].to_string());
  }
  return {{"bound", report.bound},
          {"energies", energies},
          {"guesses", guesses},
          {"max_depth", max_depth},
          {"fallback", report.fallback},
          {"fallback_updates", report.fallback_updates},
          {"total_updates", report.total_updates},
          {"edge_work", report.edge_work},
          {"wall_ms", report.wall_ms}};
}

struct BenchRow {
  std::string suite;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight w = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::uint64_t updates = 0;
  std::uint64_t edge_work = 0;
  double wall_ms = 0;
};

void bench_pair(std::vector<BenchRow>& rows, const std::string& suite, const std::string& family,
                const GameGraph& g, std::uint64_t seed) {
  const BenchRow base{suite, family, g.num_nodes(), g.num_edges(), g.max_abs_weight(), seed};
  const ViterResult plain = solve_with_list(g, full_list(universal_bound(g)));
  BenchRow row = base;
  row.algorithm = "viter_full";
  row.updates = plain.stats.total_updates;
  row.edge_work = plain.stats.edge_work;
  row.wall_ms = plain.stats.wall_ms;
  rows.push_back(row);

  const SolveReport exact = solve(g);
  row = base;
  row.algorithm = "exact";
  row.updates = exact.total_updates;
  row.edge_work = exact.edge_work;
  row.wall_ms = exact.wall_ms;
  rows.push_back(row);
}

std::vector<BenchRow> run_bench(const std::string& suite, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  if (suite == "wsweep") {
    for (int exponent : {4, 8, 12, 16}) {
      const GameGraph g = high_penalty_family(8, Weight{1} << exponent, seed);
      bench_pair(rows, suite, "penalty", g, seed);
    }
  } else if (suite == "penalty") {
    for (std::size_t branches : {2, 4, 8, 16, 32}) {
      for (std::uint64_t s = seed; s < seed + 3; ++s) {
        bench_pair(rows, suite, "penalty", high_penalty_family(branches, 1 << 10, s), s);
      }
    }
  } else if (suite == "window") {
    for (std::size_t n : {5, 10, 20, 40}) {
      for (std::uint64_t s = seed; s < seed + 3; ++s) {
        const GeneratedGame game = windowed_game(2, 1, -8, 8, n, 2 * n, s);
        const GameGraph& g = game.graph;
        bench_pair(rows, suite, "window", g, s);
        const ViterResult windowed =
            solve_with_list(g, window_list(game.centers, 1, g.num_nodes(), universal_bound(g)));
        BenchRow row{suite, "window", g.num_nodes(), g.num_edges(), g.max_abs_weight(), s};
        row.algorithm = "viter_window";
        row.updates = windowed.stats.total_updates;
        row.edge_work = windowed.stats.edge_work;
        row.wall_ms = windowed.stats.wall_ms;
        rows.push_back(row);
      }
    }
  } else {
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.family, a.n, a.w, a.seed, a.algorithm) <
           std::tie(b.family, b.n, b.w, b.seed, b.algorithm);
  });
  return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows, bool with_time) {
  std::ostringstream out;
  out << "suite,family,n,m,W,seed,algorithm,node_updates,edge_relaxations"
      << (with_time ? ",wall_ms" : "") << '\n';
  for (const BenchRow& r : rows) {
    out << r.suite << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.w << ',' << r.seed
        << ',' << r.algorithm << ',' << r.updates << ',' << r.edge_work;
    if (with_time) out << ',' << r.wall_ms;
    out << '\n';
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy game solver"};
  app.require_subcommand(1);

  std::string game_path;
  std::string out_path;
  std::optional<std::int64_t> bound;
  std::string assume_penalty;
  std::string report_path;
  std::int64_t error_target = 0;
  std::size_t node = 0;
  std::string energy_path;
  std::uint64_t max_pairs = oracle::Budget{}.max_strategy_pairs;
  std::string trace_path;
  std::string suite;
  std::uint64_t seed = 1;
  bool no_time = false;
  GenSpec spec;
  std::string family = "random";
  std::string centers_path;

  auto* solve_cmd = app.add_subcommand("solve", "Exact minimal energies");
  solve_cmd->add_option("game", game_path, "Game file")->required();
  solve_cmd->add_option("--bound", bound, "Upper bound on finite minimal energies (default nW)");
  solve_cmd->add_option("--assume-penalty", assume_penalty,
                        "Run the recursion once with this penalty lower bound (p or p/q)");
  solve_cmd->add_option("--report", report_path, "Write a JSON solve report to this path");
  solve_cmd->add_option("--out", out_path, "Energy file path (default stdout)");

  auto* approx_cmd = app.add_subcommand("approx", "Additive approximation from below");
  approx_cmd->add_option("game", game_path, "Game file")->required();
  approx_cmd->add_option("--error", error_target, "Error target c >= n")->required();
  approx_cmd->add_option("--bound", bound, "Upper bound on finite minimal energies (default nW)");
  approx_cmd->add_option("--out", out_path, "Energy file path (default stdout)");

  auto* decide_cmd = app.add_subcommand("decide", "Winner at one node");
  decide_cmd->add_option("game", game_path, "Game file")->required();
  decide_cmd->add_option("--node", node, "Start node")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check that an energy function is minimal");
  verify_cmd->add_option("game", game_path, "Game file")->required();
  verify_cmd->add_option("energies", energy_path, "Energy file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimal energies");
  oracle_cmd->add_option("game", game_path, "Game file")->required();
  oracle_cmd->add_option("--max-pairs", max_pairs, "Strategy pair budget");
  oracle_cmd->add_option("--out", out_path, "Energy file path (default stdout)");

  auto* penalty_cmd = app.add_subcommand("penalty", "Brute-force penalty per node");
  penalty_cmd->add_option("game", game_path, "Game file")->required();
  penalty_cmd->add_option("--max-pairs", max_pairs, "Strategy pair budget");

  auto* reduce_cmd = app.add_subcommand("reduce", "Hardness reductions");
  reduce_cmd->require_subcommand(1);
  auto add_reduce = [&](const std::string& name, const std::string& description) {
    auto* cmd = reduce_cmd->add_subcommand(name, description);
    cmd->add_option("game", game_path, "Game file")->required();
    cmd->add_option("--out", out_path, "Output game file (default stdout)");
    cmd->add_option("--trace", trace_path, "Trace sidecar path");
    return cmd;
  };
  auto* winall_cmd = add_reduce("winall", "Make one player win everywhere");
  winall_cmd->add_option("--node", node, "Start node s")->required();
  auto* bipartite_cmd = add_reduce("bipartite", "Split same-owner edges");
  auto* complete_cmd = add_reduce("complete", "Complete a bipartite graph");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", family, "random | penalty | window | multiples")
      ->check(CLI::IsMember({"random", "penalty", "window", "multiples"}));
  gen_cmd->add_option("--seed", spec.seed, "PRNG seed");
  gen_cmd->add_option("--n", spec.n, "Nodes");
  gen_cmd->add_option("--m", spec.m, "Edges");
  gen_cmd->add_option("--W", spec.max_weight, "Weight scale");
  gen_cmd->add_option("--alice-percent", spec.alice_percent, "Alice node probability in percent")
      ->check(CLI::Range(0, 100));
  gen_cmd->add_option("--max-out-degree", spec.max_out_degree, "Out-degree cap (0 = none)");
  gen_cmd->add_option("--step", spec.step, "Multiples: weight step B");
  gen_cmd->add_option("--windows", spec.windows, "Window: number of centres d");
  gen_cmd->add_option("--delta", spec.delta, "Window: jitter");
  gen_cmd->add_option("--center-lo", spec.center_lo, "Window: smallest centre");
  gen_cmd->add_option("--center-hi", spec.center_hi, "Window: largest centre");
  gen_cmd->add_option("--branches", spec.branches, "Penalty: hub branches");
  gen_cmd->add_option("--centers", centers_path, "Window: write centres to this path");
  gen_cmd->add_option("--out", out_path, "Output game file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark suites");
  bench_cmd->add_option("--suite", suite, "wsweep | penalty | window")
      ->required()
      ->check(CLI::IsMember({"wsweep", "penalty", "window"}));
  bench_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  bench_cmd->add_option("--seed", seed, "Base seed");
  bench_cmd->add_flag("--no-time", no_time, "Omit the wall-clock column");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const Loaded g = load(game_path);
      if (!assume_penalty.empty()) {
        const Rational penalty = Rational::parse(assume_penalty);
        const std::int64_t m = bound.value_or(universal_bound(g.graph));
        RecursionStats stats;
        EnergyFunction e;
        bool verified = false;
        try {
          e = minimal_energy_with_penalty_bound(g.graph, m, penalty, &stats);
          verified = verify_minimal(g.graph, e);
        } catch (const PotentialContractError& ex) {
          err << "contract violation: " << ex.what() << '\n';
          return kVerificationFailure;
        }
        emit(format_energies(restrict(e, g.original)) +
                 (verified ? "# verified yes\n" : "# verified no\n"),
             out_path, out);
        return verified ? kOk : kVerificationFailure;
      }
      const SolveReport report = solve(g.graph, bound);
      emit(format_energies(restrict(report.energies, g.original)), out_path, out);
      if (!report_path.empty()) write_text_file(report_path, report_json(report, g.original).dump(2) + "\n");
      return kOk;
    }
    if (approx_cmd->parsed()) {
      const Loaded g = load(game_path);
      const Approximation a =
          approximate_energies(g.graph, bound.value_or(universal_bound(g.graph)), error_target);
      emit(format_energies(restrict(a.energies, g.original)), out_path, out);
      return kOk;
    }
    if (decide_cmd->parsed()) {
      const Loaded g = load(game_path);
      if (node >= g.original) throw CLI::ValidationError("--node", "node out of range");
      const SolveReport report = solve(g.graph);
      out << (report.energies[node].is_finite() ? "ALICE" : "BOB") << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Loaded g = load(game_path);
      const EnergyFunction e = read_energy_file(energy_path, g.original);
      const bool ok = verify_minimal(g.graph, extend_to_helpers(g.graph, e));
      out << (ok ? "OK" : "FAIL") << '\n';
      return ok ? kOk : kVerificationFailure;
    }
    if (oracle_cmd->parsed()) {
      const Loaded g = load(game_path);
      oracle::Budget budget;
      budget.max_strategy_pairs = max_pairs;
      budget.max_nodes = std::max(budget.max_nodes, g.graph.num_nodes());
      const EnergyFunction e = oracle::brute_force_energies(g.graph, budget);
      emit(format_energies(restrict(e, g.original)), out_path, out);
      return kOk;
    }
    if (penalty_cmd->parsed()) {
      const Loaded g = load(game_path);
      oracle::Budget budget;
      budget.max_strategy_pairs = max_pairs;
      budget.max_nodes = std::max(budget.max_nodes, g.graph.num_nodes());
      const oracle::PenaltyReport p = oracle::brute_force_penalty(g.graph, budget);
      for (std::size_t v = 0; v < g.original; ++v) {
        out << "v " << v << ' ' << p.per_node[v].to_string() << '\n';
      }
      out << "# penalty " << p.graph_penalty().to_string() << '\n';
      return kOk;
    }
    if (reduce_cmd->parsed()) {
      const GameGraph g = read_game_file(game_path);
      Reduced r;
      if (winall_cmd->parsed()) {
        WinEverywhere w = to_win_everywhere(g, node);
        r = {std::move(w.graph), std::move(w.trace)};
      } else if (bipartite_cmd->parsed()) {
        r = to_bipartite(g);
      } else if (complete_cmd->parsed()) {
        r = to_complete_bipartite(g);
      }
      emit(format_game(r.graph), out_path, out);
      if (!trace_path.empty()) write_text_file(trace_path, format_trace(r.trace));
      return kOk;
    }
    if (gen_cmd->parsed()) {
      spec.family = parse_family(family);
      const GeneratedGame game = generate(spec);
      emit(format_game(game.graph), out_path, out);
      if (!centers_path.empty()) {
        std::ostringstream text;
        for (Weight c : game.centers) text << c << '\n';
        write_text_file(centers_path, text.str());
      }
      return kOk;
    }
    if (bench_cmd->parsed()) {
      emit(format_csv(run_bench(suite, seed), !no_time), out_path, out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidGame& e) {
    err << "invalid game: " << e.what() << '\n';
    return kParseError;
  } catch (const oracle::BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace egsolve::cli
