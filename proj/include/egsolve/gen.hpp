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
#include <string>
#include <vector>

#include "egsolve/graph.hpp"

namespace egsolve {

/**
 * SplitMix64. Transition: state += 0x9E3779B97F4A7C15; output z = state mixed by
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z =  z ^ (z >> 31)
 * with all arithmetic modulo 2^64.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] by rejection sampling; lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class Family { Random, Penalty, Window, Multiples };

Family parse_family(const std::string& name);
std::string family_name(Family family);

struct GenSpec {
  Family family = Family::Random;
  std::size_t n = 4;
  std::size_t m = 8;
  Weight max_weight = 10;
  /// Probability in percent that a node belongs to Alice.
  int alice_percent = 50;
  std::uint64_t seed = 1;
  /// 0 means unbounded.
  std::size_t max_out_degree = 0;
  /// Multiples: every weight is a multiple of this.
  std::int64_t step = 1;
  /// Window: number of centres, jitter, and the range centres are drawn from.
  std::size_t windows = 1;
  std::int64_t delta = 0;
  Weight center_lo = -10;
  Weight center_hi = 10;
  /// Penalty: number of branches at the hub.
  std::size_t branches = 2;
};

struct GeneratedGame {
  GameGraph graph;
  /// Window centres (window family only).
  std::vector<Weight> centers;
};

/**
 * Uniform owners and edges, weights in [-W, W]. Every node first receives one
 * out-edge; the rest are distinct non-loop pairs. Throws std::invalid_argument
 * when n < 2, m < n, or m exceeds the pairs allowed by the degree cap.
 */
GameGraph random_game(const GenSpec& spec);

/**
 * Alice hub 0 with `branches` disjoint cycles hub -> x -> y -> hub through Bob
 * nodes x = 2i+1, y = 2i+2. Each cycle total is in [1, 3W] or in
 * [-3W, -ceil(3W/2)], at least one positive. Randomness is drawn at a fixed
 * resolution independent of W, so a fixed seed gives the same topology and
 * signs with weights roughly proportional to W.
 */
GameGraph high_penalty_family(std::size_t branches, Weight scale, std::uint64_t seed);

/// Random topology whose weights are a random centre plus jitter in [-delta, delta].
GeneratedGame windowed_game(std::size_t windows, std::int64_t delta, Weight center_lo,
                            Weight center_hi, std::size_t n, std::size_t m, std::uint64_t seed);

/// Random topology with weights B * k, |B * k| <= W.
GameGraph multiples_game(const GenSpec& spec);

GeneratedGame generate(const GenSpec& spec);

}  // namespace egsolve
