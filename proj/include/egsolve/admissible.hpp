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
#include <span>
#include <vector>

#include "egsolve/energy.hpp"

namespace egsolve {

/**
 * Sorted candidate set for minimal-energy values.
 *
 * Holds a strictly increasing run of non-negative finite values; infinity is
 * always the implicit last element, so rounding up never runs off the end.
 */
class AdmissibleList {
 public:
  AdmissibleList() = default;
  /// Throws std::invalid_argument unless `values` is strictly increasing and non-negative.
  explicit AdmissibleList(std::vector<std::int64_t> values);

  /// Smallest member >= x (x may be negative); infinity past the last finite value.
  Energy round_up(std::int64_t x) const;
  Energy round_up(Energy x) const { return x.is_finite() ? round_up(x.value()) : x; }

  bool contains(Energy x) const;

  Energy front() const { return values_.empty() ? Energy::infinity() : Energy(values_.front()); }
  /// Number of members, counting the terminal infinity.
  std::size_t size() const { return values_.size() + 1; }
  const std::vector<std::int64_t>& finite_values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

/// {0, 1, ..., bound, inf}.
AdmissibleList full_list(std::int64_t bound);

/// {i * step : 0 <= i <= ceil(bound / step)} plus inf.
AdmissibleList multiples_list(std::int64_t step, std::int64_t bound);

struct WindowList {
  AdmissibleList list;
  /// |S|: number of distinct window centres -sum(k_i * c_i) before widening.
  std::size_t seed_count = 0;
};

/**
 * Fixed-window list: S = {-sum k_i * centers[i] : k_i >= 0, sum k_i <= nodes},
 * widened by +-nodes*delta around every element of S and clamped to [0, bound].
 */
WindowList build_window_list(std::span<const Weight> centers, std::int64_t delta,
                             std::size_t nodes, std::int64_t bound);

inline AdmissibleList window_list(std::span<const Weight> centers, std::int64_t delta,
                                  std::size_t nodes, std::int64_t bound) {
  return build_window_list(centers, delta, nodes, bound).list;
}

}  // namespace egsolve
