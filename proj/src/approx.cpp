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

#include "egsolve/approx.hpp"

#include <stdexcept>
#include <vector>

#include "egsolve/admissible.hpp"

namespace egsolve {

Weight round_up_to_multiple(Weight w, std::int64_t step) {
  if (step < 1) throw std::invalid_argument("rounding step must be positive");
  Weight q = w / step;
  if (w % step != 0 && w > 0) ++q;
  Weight rounded = 0;
  if (__builtin_mul_overflow(q, step, &rounded)) throw std::overflow_error("rounded weight overflow");
  return rounded;
}

RoundedGame round_weights(const GameGraph& graph, std::int64_t step) {
  std::vector<Weight> weights = graph.weights();
  for (Weight& w : weights) w = round_up_to_multiple(w, step);
  return {graph.with_weights(weights), step};
}

Approximation approximate_energies(const GameGraph& graph, std::int64_t bound, std::int64_t error) {
  const auto n = static_cast<std::int64_t>(graph.num_nodes());
  if (error < n) throw std::invalid_argument("approximation error must be at least the node count");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const std::int64_t step = n == 0 ? 1 : error / n;

  // The same bound serves the rounded game: its minimal energies never exceed
  // the original ones, and floor-to-multiple of the original energies is a
  // solution of the rounded progress conditions inside this list.
  const RoundedGame rounded = round_weights(graph, step);
  ViterResult solved = solve_with_list(rounded.graph, multiples_list(step, bound));
  return {std::move(solved.energies), step, std::move(solved.stats)};
}

}  // namespace egsolve
