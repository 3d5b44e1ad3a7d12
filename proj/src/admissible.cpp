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

#include "egsolve/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace egsolve {

AdmissibleList::AdmissibleList(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || (i > 0 && values_[i] <= values_[i - 1])) {
      throw std::invalid_argument("admissible list must be strictly increasing and non-negative");
    }
  }
}

Energy AdmissibleList::round_up(std::int64_t x) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), x);
  return it == values_.end() ? Energy::infinity() : Energy(*it);
}

bool AdmissibleList::contains(Energy x) const {
  if (x.is_infinite()) return true;
  return std::binary_search(values_.begin(), values_.end(), x.value());
}

AdmissibleList full_list(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  std::vector<std::int64_t> values(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t i = 0; i <= bound; ++i) values[static_cast<std::size_t>(i)] = i;
  return AdmissibleList(std::move(values));
}

AdmissibleList multiples_list(std::int64_t step, std::int64_t bound) {
  if (step < 1) throw std::invalid_argument("step must be positive");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const std::int64_t count = (bound + step - 1) / step;
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t i = 0; i <= count; ++i) values.push_back(i * step);
  return AdmissibleList(std::move(values));
}

WindowList build_window_list(std::span<const Weight> centers, std::int64_t delta,
                             std::size_t nodes, std::int64_t bound) {
  if (centers.empty()) throw std::invalid_argument("window list needs at least one centre");
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");

  // All multisets of at most `nodes` centres, by recursion over the centre index.
  std::vector<std::int64_t> seeds;
  auto extend = [&](auto& self, std::size_t i, std::size_t remaining, std::int64_t sum) -> void {
    if (i == centers.size()) {
      seeds.push_back(sum);
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      self(self, i + 1, remaining - k, sum - static_cast<std::int64_t>(k) * centers[i]);
    }
  };
  extend(extend, 0, nodes, 0);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  // Every window has the same radius, so windows arrive ordered by their left end
  // and appending only values above the current tail keeps the output sorted.
  const std::int64_t radius = static_cast<std::int64_t>(nodes) * delta;
  std::vector<std::int64_t> values;
  for (std::int64_t seed : seeds) {
    std::int64_t lo = std::max<std::int64_t>(seed - radius, 0);
    if (!values.empty()) lo = std::max(lo, values.back() + 1);
    const std::int64_t hi = std::min(seed + radius, bound);
    for (std::int64_t x = lo; x <= hi; ++x) values.push_back(x);
  }
  return {AdmissibleList(std::move(values)), seeds.size()};
}

}  // namespace egsolve
