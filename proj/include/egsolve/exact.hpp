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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"
#include "egsolve/rational.hpp"

namespace egsolve {

/// Work counters accumulated over one run of the approximation recursion.
struct RecursionStats {
  std::size_t depth = 0;
  /// Value-iteration updates of every phase (approximation or plain solve) in call order.
  std::vector<std::uint64_t> phase_updates;
  std::uint64_t total_updates = 0;
  std::uint64_t edge_work = 0;
  /// Nodes the outermost level marked infinite; exactly Bob's region when `bound` is valid.
  std::vector<bool> first_level_infinite;
};

/**
 * Exact minimal energies by repeated approximation, given a claimed lower bound
 * `penalty` (>= 1) on the penalty and an upper bound `bound` on the finite
 * minimal energies.
 *
 * Each level approximates with error c, shifts weights by the approximation and
 * recurses on the finite part with bound c. c is floor(bound/2) while
 * penalty >= bound/(2n) and floor(n * penalty) otherwise; bound <= n ends with
 * plain value iteration. The output is only guaranteed when both claims hold;
 * callers verify it. Wrong claims may surface as PotentialContractError.
 */
EnergyFunction minimal_energy_with_penalty_bound(const GameGraph& graph, std::int64_t bound,
                                                 const Rational& penalty,
                                                 RecursionStats* stats = nullptr);

/// n * W: a bound on every finite minimal energy.
std::int64_t universal_bound(const GameGraph& graph);

struct GuessRecord {
  /// c_k = floor(bound / 2^k); the penalty guess is c_k / n.
  std::int64_t scaled_guess = 0;
  Rational penalty_guess;
  bool verified = false;
  bool contract_violation = false;
  RecursionStats stats;
};

struct SolveReport {
  EnergyFunction energies;
  std::int64_t bound = 0;
  std::vector<GuessRecord> guesses;
  /// True when every guess failed and plain value iteration produced the answer.
  bool fallback = false;
  std::uint64_t fallback_updates = 0;
  std::uint64_t total_updates = 0;
  std::uint64_t edge_work = 0;
  double wall_ms = 0.0;
};

/**
 * Minimal energies without knowing the penalty: tries penalty guesses
 * bound/(2n), bound/(4n), ... while they are >= 1, accepting the first output
 * that passes verify_minimal, and otherwise falls back to value iteration over
 * {0..bound}. The returned energies always pass verify_minimal.
 */
SolveReport solve(const GameGraph& graph, std::optional<std::int64_t> bound = std::nullopt);

}  // namespace egsolve
