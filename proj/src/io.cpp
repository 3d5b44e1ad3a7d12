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

#include "egsolve/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace egsolve {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return tokens;
}

bool is_blank_or_comment(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

std::int64_t parse_int(const std::string& token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

std::size_t parse_id(const std::string& token, std::size_t line, std::size_t nodes) {
  const std::int64_t id = parse_int(token, line, "node id");
  if (id < 0 || static_cast<std::uint64_t>(id) >= nodes) {
    throw ParseError(line, "unknown node id " + token);
  }
  return static_cast<std::size_t>(id);
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t arity, std::size_t line) {
  if (tokens.size() != arity) {
    throw ParseError(line, "expected " + std::to_string(arity) + " fields, got " +
                               std::to_string(tokens.size()));
  }
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

GameGraph parse_game(std::istream& in) {
  std::optional<std::size_t> nodes;
  std::size_t declared_edges = 0;
  std::vector<std::optional<Player>> owners;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(line);
    if (is_blank_or_comment(tokens)) continue;
    const std::string& kind = tokens.front();

    if (kind == "p") {
      if (nodes) throw ParseError(line_no, "duplicate header");
      expect_arity(tokens, 4, line_no);
      if (tokens[1] != "eg") throw ParseError(line_no, "expected format tag 'eg'");
      const std::int64_t n = parse_int(tokens[2], line_no, "node count");
      const std::int64_t m = parse_int(tokens[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
      nodes = static_cast<std::size_t>(n);
      declared_edges = static_cast<std::size_t>(m);
      owners.assign(*nodes, std::nullopt);
      continue;
    }
    if (!nodes) throw ParseError(line_no, "missing header 'p eg <n> <m>' before body");

    if (kind == "v") {
      expect_arity(tokens, 3, line_no);
      const std::size_t id = parse_id(tokens[1], line_no, *nodes);
      if (owners[id]) throw ParseError(line_no, "duplicate node " + tokens[1]);
      if (tokens[2] == "A") {
        owners[id] = Player::Alice;
      } else if (tokens[2] == "B") {
        owners[id] = Player::Bob;
      } else {
        throw ParseError(line_no, "owner must be A or B, got '" + tokens[2] + "'");
      }
    } else if (kind == "e") {
      expect_arity(tokens, 4, line_no);
      const std::size_t from = parse_id(tokens[1], line_no, *nodes);
      const std::size_t to = parse_id(tokens[2], line_no, *nodes);
      const std::int64_t w = parse_int(tokens[3], line_no, "weight");
      if (w == std::numeric_limits<std::int64_t>::min()) throw ParseError(line_no, "weight out of range");
      if (edges.size() == declared_edges) {
        throw ParseError(line_no, "more edges than the header declares");
      }
      edges.push_back({from, to, w});
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }

  if (!nodes) throw ParseError(0, "missing header 'p eg <n> <m>'");
  std::vector<Player> resolved(*nodes);
  for (std::size_t v = 0; v < *nodes; ++v) {
    if (!owners[v]) throw ParseError(0, "node " + std::to_string(v) + " is never declared");
    resolved[v] = *owners[v];
  }
  if (edges.size() != declared_edges) {
    throw ParseError(0, "header declares " + std::to_string(declared_edges) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return GameGraph(std::move(resolved), std::move(edges));
}

GameGraph parse_game_string(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

std::string format_game(const GameGraph& graph) {
  std::ostringstream out;
  out << "p eg " << graph.num_nodes() << ' ' << graph.num_edges() << '\n';
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    out << "v " << v << ' ' << (graph.owner(v) == Player::Alice ? 'A' : 'B') << '\n';
  }
  for (const Edge& e : graph.edges()) out << "e " << e.from << ' ' << e.to << ' ' << e.weight << '\n';
  return out.str();
}

EnergyFunction parse_energies(std::istream& in, std::size_t nodes) {
  std::vector<std::optional<Energy>> values(nodes);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(line);
    if (is_blank_or_comment(tokens)) continue;
    if (tokens.front() != "v") throw ParseError(line_no, "unknown line type '" + tokens.front() + "'");
    expect_arity(tokens, 3, line_no);
    const std::size_t id = parse_id(tokens[1], line_no, nodes);
    if (values[id]) throw ParseError(line_no, "duplicate node " + tokens[1]);
    if (tokens[2] == "inf") {
      values[id] = Energy::infinity();
    } else {
      const std::int64_t value = parse_int(tokens[2], line_no, "energy");
      if (value < 0 || value == std::numeric_limits<std::int64_t>::max()) {
        throw ParseError(line_no, "energy out of range '" + tokens[2] + "'");
      }
      values[id] = Energy(value);
    }
  }
  EnergyFunction e(nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    if (!values[v]) throw ParseError(0, "missing energy for node " + std::to_string(v));
    e[v] = *values[v];
  }
  return e;
}

EnergyFunction parse_energies_string(const std::string& text, std::size_t nodes) {
  std::istringstream in(text);
  return parse_energies(in, nodes);
}

std::string format_energies(const EnergyFunction& e) {
  std::ostringstream out;
  for (std::size_t v = 0; v < e.size(); ++v) out << "v " << v << ' ' << e[v].to_string() << '\n';
  return out.str();
}

GameGraph read_game_file(const std::string& path) { return parse_game_string(read_all(path)); }

EnergyFunction read_energy_file(const std::string& path, std::size_t nodes) {
  return parse_energies_string(read_all(path), nodes);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace egsolve
