// Copyright 2026 The Whiteboard Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "whiteboard/cli.hpp"
#include "whiteboard/graph.hpp"

namespace whiteboard::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A scratch directory removed at scope exit.
class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("wb_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string operator/(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string write_graph(const Scratch& dir, const std::string& name, const LabeledGraph& g) {
  const std::string path = dir / name;
  write_graph_file(path, g);
  return path;
}

const LabeledGraph kP3 = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});

TEST_CASE("gen class-c then oracle square") {
  Scratch dir;
  const std::string base = write_graph(dir, "p3.graph", kP3);
  const std::string c = dir / "c.graph";
  const Outcome gen = call({"gen", "--kind", "class-c", "--base", base, "--i", "1", "--j", "3",
                            "--out", c});
  CHECK(gen.code == kOk);
  const Outcome o = call({"oracle", "--graph", c, "--problem", "square"});
  CHECK(o.code == kOk);
  CHECK(o.out == "false\n");
  CHECK(o.err.empty());

  call({"gen", "--kind", "class-c", "--base", base, "--i", "1", "--j", "2", "--out", c});
  CHECK(call({"oracle", "--graph", c, "--problem", "square"}).out == "true\n");
}

TEST_CASE("run mis on a path") {
  Scratch dir;
  const std::string p3 = write_graph(dir, "p3.graph", kP3);
  const Outcome r = call({"run", "--graph", p3, "--protocol", "mis", "--x", "2", "--model",
                          "simsync", "--scheduler", "fixed:2,1,3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "{2}\n");
}

TEST_CASE("sweep on a disconnected spanning tree deadlocks") {
  Scratch dir;
  const std::string g = write_graph(dir, "split.graph", LabeledGraph::FromEdges(4, {{1, 2}, {3, 4}}));
  const std::string report = dir / "report.json";
  const Outcome r = call({"sweep", "--graph", g, "--protocol", "spanning-tree", "--root", "1",
                          "--model", "freeasync", "--report", report});
  CHECK(r.code == kDeadlock);
  const auto json = nlohmann::json::parse(slurp(report));
  CHECK_FALSE(json.at("deadlocks").empty());
  CHECK(json.at("deadlocks").at(0).at("schedule").size() == 2);
}

TEST_CASE("sweep summary and exit codes") {
  Scratch dir;
  const std::string c4 = write_graph(dir, "c4.graph", generate({CycleGraph{4}, std::nullopt}));
  const Outcome ok = call({"sweep", "--graph", c4, "--protocol", "bfs", "--root", "1", "--model",
                           "freesync", "--no-memo"});
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("failures=0") != std::string::npos);
  CHECK(ok.out.find("exhaustive=true") != std::string::npos);
  CHECK(ok.out.find("outcome {2->1,3->2,4->1}") != std::string::npos);

  // Lifted into a stronger model, MIS still holds everywhere.
  const Outcome lifted = call({"sweep", "--graph", c4, "--protocol", "mis", "--x", "1", "--model",
                               "freesync", "--jobs", "2"});
  CHECK(lifted.code == kOk);

  const std::string c6 = write_graph(dir, "c6.graph", generate({CycleGraph{6}, std::nullopt}));
  const Outcome capped = call({"sweep", "--graph", c6, "--protocol", "two-cliques", "--model",
                               "simsync", "--max-states", "10"});
  CHECK(capped.code == kOk);
  CHECK(capped.out.find("exhaustive=false") != std::string::npos);
  CHECK(capped.err.find("max_states") != std::string::npos);
}

// Outside class C: the low nodes form a 4-cycle the protocol cannot see.
LabeledGraph hidden_square() {
  return LabeledGraph::FromEdges(
      8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 7}});
}

TEST_CASE("a wrong output exits 1") {
  Scratch dir;
  const std::string path = write_graph(dir, "sq.graph", hidden_square());
  REQUIRE(call({"oracle", "--graph", path, "--problem", "square"}).out == "true\n");
  const Outcome r = call({"run", "--graph", path, "--protocol", "square-c", "--model", "freeasync",
                          "--scheduler", "min-id"});
  CHECK(r.out == "false\n");
  CHECK(r.code == kPropertyViolated);

  const std::string c4 = write_graph(dir, "c4.graph", generate({CycleGraph{4}, std::nullopt}));
  CHECK(call({"run", "--graph", c4, "--protocol", "bfs", "--root", "1", "--model", "freesync",
              "--scheduler", "min-id", "--budget", "1"}).code == kPropertyViolated);
}

TEST_CASE("usage errors exit 3") {
  Scratch dir;
  const std::string p3 = write_graph(dir, "p3.graph", kP3);
  CHECK(call({}).code == kUsageError);
  CHECK(call({"frobnicate"}).code == kUsageError);
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--x", "2", "--model", "simsync",
              "--scheduler", "min-id", "--verbose"}).code == kUsageError);
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--model", "simsync", "--scheduler",
              "min-id"}).code == kUsageError);
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--x", "9", "--model", "simsync",
              "--scheduler", "min-id"}).code == kUsageError);
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--x", "2", "--model", "simsync",
              "--scheduler", "fixed:1,2"}).code == kUsageError);
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--x", "2", "--model", "fastsync",
              "--scheduler", "min-id"}).code == kUsageError);
  // MIS is a SimSync protocol; it cannot be lowered to SimAsync.
  CHECK(call({"run", "--graph", p3, "--protocol", "mis", "--x", "2", "--model", "simasync",
              "--scheduler", "min-id"}).code == kUsageError);
  CHECK(call({"run", "--graph", dir / "missing.graph", "--protocol", "num-edges", "--model",
              "simasync", "--scheduler", "min-id"}).code == kUsageError);
  CHECK(call({"audit", "--family", "planar", "--n", "3"}).code == kUsageError);
  CHECK(call({"audit", "--family", "all", "--n", "9"}).code == kUsageError);
  CHECK(call({"gen", "--kind", "class-c", "--i", "1", "--j", "2", "--out", dir / "x"}).code ==
        kUsageError);
  const Outcome bad = call({"oracle", "--graph", p3, "--problem", "hamiltonian"});
  CHECK(bad.code == kUsageError);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("gen round trip through run") {
  Scratch dir;
  const std::string path = dir / "gadget.graph";
  REQUIRE(call({"gen", "--kind", "bfs-gadget", "--base", write_graph(dir, "p3.graph", kP3), "--i",
                "2", "--out", path}).code == kOk);
  const LabeledGraph expected = generate({BfsGadget{2}, kP3});
  CHECK(read_graph_file(path) == expected);
  CHECK(slurp(path) == to_graph_file(expected));
  const Outcome r = call({"run", "--graph", path, "--protocol", "num-edges", "--model", "simasync",
                          "--scheduler", "max-id"});
  CHECK(r.out == std::to_string(expected.edge_count()) + "\n");
  for (const char* kind : {"cycle", "path", "two-cliques"}) {
    const std::string p = dir / kind;
    REQUIRE(call({"gen", "--kind", kind, "--n", "5", "--out", p}).code == kOk);
    const std::string text = slurp(p);
    CHECK(to_graph_file(read_graph_file(p)) == text);
  }
}

TEST_CASE("random traces are byte-deterministic") {
  Scratch dir;
  const std::string g = write_graph(dir, "c6.graph", generate({CycleGraph{6}, std::nullopt}));
  const std::vector<std::string> base{"run", "--graph", g, "--protocol", "bfs", "--root", "3",
                                      "--model", "freesync", "--scheduler", "random:99", "--trace"};
  auto a = base;
  a.push_back(dir / "a.jsonl");
  auto b = base;
  b.push_back(dir / "b.jsonl");
  const Outcome ra = call(a);
  const Outcome rb = call(b);
  CHECK(ra.code == kOk);
  CHECK(ra.out == rb.out);
  const std::string ta = slurp(dir / "a.jsonl");
  CHECK_FALSE(ta.empty());
  CHECK(ta == slurp(dir / "b.jsonl"));

  std::istringstream lines(ta);
  std::string line;
  int records = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    ++records;
  }
  CHECK(records == 7);
  CHECK(last.contains("output"));
  CHECK(last.at("stats").at("steps") == 6);
}

TEST_CASE("sweep witnesses replay through run") {
  Scratch dir;
  const std::string report = dir / "r.json";
  const std::string sq = write_graph(dir, "sq.graph", hidden_square());
  const Outcome s = call({"sweep", "--graph", sq, "--protocol", "square-c", "--model",
                          "freeasync", "--report", report});
  CHECK(s.code == kPropertyViolated);
  const auto failures = nlohmann::json::parse(slurp(report)).at("failures");
  REQUIRE_FALSE(failures.empty());
  for (std::size_t k = 0; k < failures.size(); k += 97) {
    std::string order;
    for (const auto& v : failures[k].at("schedule")) order += std::to_string(v.get<int>()) + ",";
    order.pop_back();
    const Outcome r = call({"run", "--graph", sq, "--protocol", "square-c", "--model", "freeasync",
                            "--scheduler", "fixed:" + order});
    CHECK(r.code == kPropertyViolated);
    CHECK(r.out == "false\n");
  }

  const std::string split = write_graph(dir, "split.graph", LabeledGraph::FromEdges(4, {{1, 2}, {3, 4}}));
  call({"sweep", "--graph", split, "--protocol", "spanning-tree", "--root", "1", "--model",
        "freeasync", "--report", report});
  const auto deadlocks = nlohmann::json::parse(slurp(report)).at("deadlocks");
  REQUIRE_FALSE(deadlocks.empty());
  for (const auto& d : deadlocks) {
    std::string order;
    for (const auto& v : d.at("schedule")) order += std::to_string(v.get<int>()) + ",";
    // Complete the witness to a permutation; the rest is never consulted.
    std::set<int> used;
    for (const auto& v : d.at("schedule")) used.insert(v.get<int>());
    for (int v = 1; v <= 4; ++v) {
      if (!used.count(v)) order += std::to_string(v) + ",";
    }
    order.pop_back();
    const Outcome r = call({"run", "--graph", split, "--protocol", "spanning-tree", "--root", "1",
                            "--model", "freeasync", "--scheduler", "fixed:" + order});
    CHECK(r.code == kDeadlock);
  }
}

TEST_CASE("audit prints JSON") {
  const Outcome r = call({"audit", "--family", "square-free", "--n", "4"});
  CHECK(r.code == kOk);
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json.at("family") == "square-free");
  CHECK(json.at("family_size") == "54");
  CHECK(json.at("bits_needed") == 6);
  CHECK(json.at("feasible") == true);
}

TEST_CASE("oracle outputs") {
  Scratch dir;
  const std::string c4 = write_graph(dir, "c4.graph", generate({CycleGraph{4}, std::nullopt}));
  CHECK(call({"oracle", "--graph", c4, "--problem", "mis", "--x", "1"}).out == "{1,3}\n");
  CHECK(call({"oracle", "--graph", c4, "--problem", "num-edges"}).out == "4\n");
  CHECK(call({"oracle", "--graph", c4, "--problem", "bfs", "--root", "1"}).out == "{1:0,2:1,3:2,4:1}\n");
  CHECK(call({"oracle", "--graph", c4, "--problem", "build"}).out == "0101/1010/0101/1010\n");
  const std::string split = write_graph(dir, "s.graph", LabeledGraph::FromEdges(3, {{1, 2}}));
  CHECK(call({"oracle", "--graph", split, "--problem", "connectivity"}).out == "false\n");
  CHECK(call({"oracle", "--graph", split, "--problem", "bfs", "--root", "1"}).out ==
        "{1:0,2:1,3:unreachable}\n");
}

// The installed binary behaves like dispatch and keeps data off stderr.
TEST_CASE("binary entry point") {
  const char* bin = std::getenv("WHITEBOARD_CLI");
  if (bin == nullptr) return;
  Scratch dir;
  const std::string p3 = write_graph(dir, "p3.graph", kP3);
  const std::string out = dir / "out.txt";
  const std::string err = dir / "err.txt";
  const std::string cmd = std::string("\"") + bin + "\" run --graph " + p3 +
                          " --protocol mis --x 2 --model simsync --scheduler fixed:2,1,3 >" + out +
                          " 2>" + err;
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp(out) == "{2}\n");
  CHECK(slurp(err).empty());

  const std::string bad = std::string("\"") + bin + "\" run --bogus >" + out + " 2>" + err;
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == 3);
  CHECK(slurp(out).empty());
  CHECK_FALSE(slurp(err).empty());
}

}  // namespace
}  // namespace whiteboard::cli
