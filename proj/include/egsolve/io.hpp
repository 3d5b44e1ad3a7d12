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

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "egsolve/energy.hpp"
#include "egsolve/graph.hpp"

namespace egsolve {

/// Malformed input; `line` is 1-based, 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Game file: `#` comment lines, header `p eg <n> <m>`, node lines `v <id> <A|B>`,
 * edge lines `e <src> <dst> <weight>`, ids 0-based. Node and edge lines may
 * interleave after the header; edges keep file order.
 */
GameGraph parse_game(std::istream& in);
GameGraph parse_game_string(const std::string& text);

/// Canonical form: header, node lines by id, edge lines in edge order.
std::string format_game(const GameGraph& graph);

/// Energy file: `v <id> <value|inf>`, one line per node. Comment lines allowed.
EnergyFunction parse_energies(std::istream& in, std::size_t nodes);
EnergyFunction parse_energies_string(const std::string& text, std::size_t nodes);

std::string format_energies(const EnergyFunction& e);

GameGraph read_game_file(const std::string& path);
EnergyFunction read_energy_file(const std::string& path, std::size_t nodes);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace egsolve
