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

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace egsolve {

using Weight = std::int64_t;

/**
 * Extended non-negative energy value: a finite integer or infinity.
 *
 * Infinity is stored as the largest int64 so that the defaulted ordering
 * treats it as the maximum element. Finite payloads never reach it.
 */
class Energy {
 public:
  constexpr Energy() = default;
  constexpr explicit Energy(std::int64_t value) : value_(value) {
    if (value < 0 || value == kInfinity) {
      throw std::out_of_range("energy value out of range");
    }
  }

  static constexpr Energy infinity() {
    Energy e;
    e.value_ = kInfinity;
    return e;
  }

  constexpr bool is_finite() const { return value_ != kInfinity; }
  constexpr bool is_infinite() const { return value_ == kInfinity; }

  /// Finite payload; calling this on infinity is a logic error.
  constexpr std::int64_t value() const {
    if (!is_finite()) throw std::logic_error("value() of infinite energy");
    return value_;
  }

  friend constexpr auto operator<=>(const Energy&, const Energy&) = default;

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("inf");
  }

 private:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

/// Node-indexed energy assignment.
using EnergyFunction = std::vector<Energy>;

/// e + f with infinity absorbing.
inline Energy operator+(Energy a, Energy b) {
  if (a.is_infinite() || b.is_infinite()) return Energy::infinity();
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
    throw std::overflow_error("energy addition overflow");
  }
  return Energy(sum);
}

}  // namespace egsolve
