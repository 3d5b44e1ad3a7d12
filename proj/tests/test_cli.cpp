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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "egsolve/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace egsolve;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("egsolve_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    const std::string p = (path_ / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("solve, oracle and decide on the example") {
  TempDir dir;
  const std::string game = dir.file("example_game.eg", format_game(testing::example_game()));
  const Run solved = run({"solve", game, "--report", dir.path("r.json")});
  CHECK(solved.code == cli::kOk);
  CHECK(solved.out == "v 0 0\nv 1 4\nv 2 8\n");
  const auto report = nlohmann::json::parse(read(dir.path("r.json")));
  CHECK(report["energies"] == nlohmann::json::array({"0", "4", "8"}));
  CHECK(report["bound"] == 24);

  CHECK(run({"oracle", game}).out == solved.out);
  CHECK(run({"decide", game, "--node", "0"}).out == "ALICE\n");
}

TEST_CASE("decide reports Bob on a negative cycle") {
  TempDir dir;
  const std::string game = dir.file("neg.eg", "p eg 2 2\nv 0 A\nv 1 B\ne 0 1 -1\ne 1 0 -1\n");
  CHECK(run({"decide", game, "--node", "1"}).out == "BOB\n");
}

TEST_CASE("verify exit codes") {
  TempDir dir;
  const std::string game = dir.file("example_game.eg", format_game(testing::example_game()));
  const std::string good = dir.file("good.energy", "v 0 0\nv 1 4\nv 2 8\n");
  const std::string bad = dir.file("bad.energy", "v 0 0\nv 1 5\nv 2 8\n");
  CHECK(run({"verify", game, good}).code == cli::kOk);
  CHECK(run({"verify", game, bad}).code == cli::kVerificationFailure);
}

TEST_CASE("approx and assume-penalty") {
  TempDir dir;
  const std::string game = dir.file("penalty3_game.eg", format_game(testing::penalty3_game()));
  CHECK(run({"approx", game, "--error", "9", "--bound", "18"}).out == "v 0 0\nv 1 0\nv 2 6\n");
  const Run direct = run({"solve", game, "--assume-penalty", "3", "--bound", "18"});
  CHECK(direct.code == cli::kOk);
  CHECK(direct.out == "v 0 0\nv 1 4\nv 2 8\n# verified yes\n");
  const Run penalty = run({"penalty", game});
  CHECK(penalty.out == "v 0 3\nv 1 3\nv 2 3\n# penalty 3\n");
}

TEST_CASE("self-loops are normalized before solving") {
  TempDir dir;
  const std::string game = dir.file("loop.eg", "p eg 2 3\nv 0 A\nv 1 B\ne 0 0 -1\ne 0 1 2\ne 1 0 -1\n");
  const Run r = run({"solve", game});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "v 0 0\nv 1 1\n");
  const std::string energy = dir.file("loop.energy", r.out);
  CHECK(run({"verify", game, energy}).code == cli::kOk);
}

TEST_CASE("error exit codes") {
  TempDir dir;
  const std::string broken = dir.file("broken.eg", "p eg 2 1\nv 0 A\nv 0 B\n");
  const Run parse = run({"solve", broken});
  CHECK(parse.code == cli::kParseError);
  CHECK(parse.err.find("line 3") != std::string::npos);

  const std::string sink = dir.file("sink.eg", "p eg 2 1\nv 0 A\nv 1 B\ne 0 1 1\n");
  CHECK(run({"solve", sink}).code == cli::kParseError);

  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"solve"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);

  const std::string game = dir.file("example_game.eg", format_game(testing::example_game()));
  CHECK(run({"oracle", game, "--max-pairs", "3"}).code == cli::kBudgetExceeded);
}

TEST_CASE("reduce writes games and traces") {
  TempDir dir;
  const std::string game = dir.file("example_game.eg", format_game(testing::example_game()));
  const Run winall = run({"reduce", "winall", game, "--node", "0", "--trace", dir.path("t.txt")});
  CHECK(winall.code == cli::kOk);
  CHECK(parse_game_string(winall.out).num_nodes() == 15);
  const std::string trace = read(dir.path("t.txt"));
  CHECK(trace.find("3 <- edge 0\n") != std::string::npos);

  const std::string split = dir.file("split.eg", run({"reduce", "bipartite", game}).out);
  const Run complete = run({"reduce", "complete", split, "--out", dir.path("c.eg")});
  CHECK(complete.code == cli::kOk);
  CHECK(read_game_file(dir.path("c.eg")).num_nodes() == 5);
  CHECK(run({"reduce", "complete", game}).code == cli::kUsage);
}

TEST_CASE("gen output round-trips and is deterministic") {
  const std::vector<std::string> args{"gen", "--family", "random", "--n", "6", "--m", "12",
                                      "--W", "9", "--seed", "4"};
  const Run a = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(run(args).out == a.out);
  CHECK(format_game(parse_game_string(a.out)) == a.out);

  TempDir dir;
  const Run w = run({"gen", "--family", "window", "--n", "5", "--m", "8", "--windows", "2",
                     "--delta", "1", "--centers", dir.path("c.txt")});
  CHECK(w.code == cli::kOk);
  CHECK(read(dir.path("c.txt")).size() > 0);
}

TEST_CASE("bench emits sorted CSV rows") {
  const Run r = run({"bench", "--suite", "wsweep", "--no-time"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("suite,family,n,m,W,seed,algorithm,node_updates,edge_relaxations\n", 0) == 0);
  CHECK(run({"bench", "--suite", "wsweep", "--no-time"}).out == r.out);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 9);
}
