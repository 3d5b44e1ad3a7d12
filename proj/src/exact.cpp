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

#include "egsolve/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "egsolve/admissible.hpp"
#include "egsolve/approx.hpp"
#include "egsolve/core.hpp"
#include "egsolve/viter.hpp"

namespace egsolve {
namespace {

void record_infinite(RecursionStats& stats, std::size_t depth, const EnergyFunction& e) {
  if (depth != 0) return;
  stats.first_level_infinite.assign(e.size(), false);
  for (std::size_t v = 0; v < e.size(); ++v) stats.first_level_infinite[v] = e[v].is_infinite();
}

void record_phase(RecursionStats& stats, const ViterStats& phase) {
  stats.phase_updates.push_back(phase.total_updates);
  stats.total_updates += phase.total_updates;
  stats.edge_work += phase.edge_work;
}

/// penalty >= bound / (2n)
bool halving_applies(const Rational& penalty, std::int64_t bound, std::int64_t n) {
  const __int128 lhs = static_cast<__int128>(penalty.numerator()) * 2 * n;
  const __int128 rhs = static_cast<__int128>(bound) * penalty.denominator();
  return lhs >= rhs;
}

EnergyFunction recurse(const GameGraph& graph, std::int64_t bound, const Rational& penalty,
                       RecursionStats& stats, std::size_t depth) {
  const auto n = static_cast<std::int64_t>(graph.num_nodes());
  if (n == 0) return {};
  stats.depth = std::max(stats.depth, depth);

  if (bound <= n) {
    ViterResult base = solve_with_list(graph, full_list(n));
    record_phase(stats, base.stats);
    record_infinite(stats, depth, base.energies);
    return std::move(base.energies);
  }

  const std::int64_t error =
      halving_applies(penalty, bound, n) ? bound / 2 : penalty.floor_times(n);
  if (error < n) {
    // Only reachable while halving with n < bound < 2n: the rounding step
    // would be zero, so solve this level exactly.
    ViterResult base = solve_with_list(graph, full_list(bound));
    record_phase(stats, base.stats);
    record_infinite(stats, depth, base.energies);
    return std::move(base.energies);
  }

  const Approximation approx = approximate_energies(graph, bound, error);
  record_phase(stats, approx.stats);
  record_infinite(stats, depth, approx.energies);
  const PotentialTransform shifted = apply_potential(graph, approx.energies);
  const EnergyFunction residual = recurse(shifted.graph, error, penalty, stats, depth + 1);

  EnergyFunction result(graph.num_nodes(), Energy::infinity());
  for (std::size_t i = 0; i < shifted.origin.size(); ++i) {
    result[shifted.origin[i]] = Energy(shifted.offset[i]) + residual[i];
  }
  return result;
}

}  // namespace

EnergyFunction minimal_energy_with_penalty_bound(const GameGraph& graph, std::int64_t bound,
                                                 const Rational& penalty, RecursionStats* stats) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  if (penalty.is_infinite() || penalty < Rational(1)) {
    throw std::invalid_argument("penalty bound must be a finite rational >= 1");
  }
  RecursionStats local;
  return recurse(graph, bound, penalty, stats ? *stats : local, 0);
}

std::int64_t universal_bound(const GameGraph& graph) {
  std::int64_t bound = 0;
  if (__builtin_mul_overflow(static_cast<std::int64_t>(graph.num_nodes()), graph.max_abs_weight(),
                             &bound)) {
    throw std::overflow_error("n * W overflows");
  }
  return bound;
}

SolveReport solve(const GameGraph& graph, std::optional<std::int64_t> bound) {
  const auto started = std::chrono::steady_clock::now();
  SolveReport report;
  report.bound = bound.value_or(universal_bound(graph));
  if (report.bound < 0) throw std::invalid_argument("bound must be non-negative");
  const auto n = static_cast<std::int64_t>(graph.num_nodes());

  auto finish = [&] {
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
  };

  if (n == 0) return finish();
  // With a bound covering every finite minimal energy the top-level approximation
  // already marks exactly Bob's winning region as infinite.
  const std::int64_t universal = universal_bound(graph);
  const InfinityCheck losing_known =
      report.bound >= universal ? InfinityCheck::Trusted : InfinityCheck::Solve;

  for (int k = 1; k < 63; ++k) {
    const std::int64_t guess = report.bound >> k;
    if (guess < n) break;
    GuessRecord record;
    record.scaled_guess = guess;
    record.penalty_guess = Rational(guess, n);
    EnergyFunction candidate;
    try {
      candidate = minimal_energy_with_penalty_bound(graph, report.bound, record.penalty_guess,
                                                    &record.stats);
      if (losing_known == InfinityCheck::Trusted) {
        bool same = true;
        for (NodeId v = 0; v < graph.num_nodes(); ++v) {
          same = same && candidate[v].is_infinite() == record.stats.first_level_infinite[v];
        }
        record.verified = same && verify_minimal(graph, candidate, InfinityCheck::Trusted);
      } else {
        record.verified = verify_minimal(graph, candidate);
      }
    } catch (const PotentialContractError&) {
      record.contract_violation = true;
    }
    report.total_updates += record.stats.total_updates;
    report.edge_work += record.stats.edge_work;
    const bool accepted = record.verified;
    report.guesses.push_back(std::move(record));
    if (accepted) {
      report.energies = std::move(candidate);
      return finish();
    }
  }

  report.fallback = true;
  ViterResult plain = solve_with_list(graph, full_list(report.bound));
  if (losing_known == InfinityCheck::Solve && !verify_minimal(graph, plain.energies)) {
    // The caller's bound was too small; n * W is always large enough.
    report.total_updates += plain.stats.total_updates;
    report.edge_work += plain.stats.edge_work;
    plain = solve_with_list(graph, full_list(universal));
  }
  report.fallback_updates = plain.stats.total_updates;
  report.total_updates += plain.stats.total_updates;
  report.edge_work += plain.stats.edge_work;
  report.energies = std::move(plain.energies);
  return finish();
}

}  // namespace egsolve
