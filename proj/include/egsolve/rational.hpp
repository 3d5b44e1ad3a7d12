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
#include <numeric>
#include <stdexcept>
#include <string>

namespace egsolve {

/// Exact rational in lowest terms with positive denominator, or +infinity.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static constexpr Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  constexpr bool is_infinite() const { return den_ == 0; }
  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  /// floor(this * k) for finite values.
  std::int64_t floor_times(std::int64_t k) const {
    if (is_infinite()) throw std::logic_error("floor_times of infinity");
    const __int128 p = static_cast<__int128>(num_) * k;
    __int128 q = p / den_;
    if (p % den_ != 0 && p < 0) --q;
    return static_cast<std::int64_t>(q);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "p/q" or "inf".
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  std::size_t used = 0;
  const auto slash = text.find('/');
  const std::string head = text.substr(0, slash);
  const std::int64_t num = std::stoll(head, &used);
  if (used != head.size()) throw std::invalid_argument("bad rational: " + text);
  if (slash == std::string::npos) return Rational(num);
  const std::string tail = text.substr(slash + 1);
  const std::int64_t den = std::stoll(tail, &used);
  if (used != tail.size()) throw std::invalid_argument("bad rational: " + text);
  return Rational(num, den);
}

}  // namespace egsolve
