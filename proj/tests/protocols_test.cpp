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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "whiteboard/adversary.hpp"
#include "whiteboard/protocols.hpp"
#include "whiteboard/verify.hpp"

namespace whiteboard {
namespace {

using protocols::BfsFields;

Scheduler fixed(std::vector<NodeId> order) { return make_scheduler(FixedOrder{std::move(order)}); }

std::vector<Payload> payloads_of(const Whiteboard& board) {
  std::vector<Payload> out;
  for (const Message& m : board) out.push_back(m.payload);
  return out;
}

int count_flag(const Whiteboard& board, Flag f) {
  int k = 0;
  for (const Message& m : board) {
    k += static_cast<int>(std::count_if(m.payload.begin(), m.payload.end(),
                                        [f](const Field& x) { return x.is_flag(f); }));
  }
  return k;
}

const Payload* payload_of(const Whiteboard& board, NodeId v) {
  for (const Message& m : board) {
    if (m.author == v) return &m.payload;
  }
  return nullptr;
}

// --- MIS ------------------------------------------------------------------

TEST_CASE("mis: star centered at x") {
  const auto star = LabeledGraph::FromEdges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const SweepReport r = sweep(star, protocols::mis_simsync(1), Model::kSimSync, {});
  REQUIRE(r.outcomes.size() == 1);
  CHECK(std::get<VertexSet>(r.outcomes.front()).ids == std::set<NodeId>{1});
}

TEST_CASE("mis: path with x in the middle") {
  const auto path = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});
  SweepOptions plain;
  plain.memoize = false;
  const SweepReport r = sweep(path, protocols::mis_simsync(2), Model::kSimSync, {}, plain);
  CHECK(r.completed_runs == 6);
  REQUIRE(r.outcomes.size() == 1);
  CHECK(std::get<VertexSet>(r.outcomes.front()).ids == std::set<NodeId>{2});
}

TEST_CASE("mis: 4-cycle, every schedule is valid") {
  const auto c4 = generate({CycleGraph{4}, std::nullopt});
  const auto valid = testing::all_mis_containing(c4, 1);
  SweepOptions plain;
  plain.memoize = false;
  const SweepReport r = sweep(c4, protocols::mis_simsync(1), Model::kSimSync, {}, plain);
  CHECK(r.completed_runs == 24);
  for (const Output& o : r.outcomes) {
    const auto& ids = std::get<VertexSet>(o).ids;
    CHECK(std::find(valid.begin(), valid.end(), ids) != valid.end());
  }
}

TEST_CASE("mis: every graph n <= 4, every x, every schedule") {
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const LabeledGraph& g) {
      for (NodeId x = 1; x <= n; ++x) {
        const auto valid = testing::all_mis_containing(g, x);
        const SweepReport r = sweep(g, protocols::mis_simsync(x), Model::kSimSync, {});
        REQUIRE(r.clean());
        for (const Output& o : r.outcomes) {
          const auto& ids = std::get<VertexSet>(o).ids;
          REQUIRE(std::find(valid.begin(), valid.end(), ids) != valid.end());
        }
      }
    });
  }
}

// --- 2-cliques --------------------------------------------------------------

TEST_CASE("two-cliques: two triangles, alternating schedule") {
  const auto g = generate({TwoCliquesGraph{3}, std::nullopt});
  const RunResult r =
      run(g, protocols::two_cliques_simsync(), Model::kSimSync, fixed({1, 4, 2, 5, 3, 6}));
  const std::vector<Flag> labels{Flag::kZero, Flag::kOne, Flag::kZero,
                                 Flag::kOne,  Flag::kZero, Flag::kOne};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    CHECK(r.board[k].payload.front().is_flag(labels[k]));
  }
  CHECK(std::get<BooleanOutput>(r.output).value);
}

TEST_CASE("two-cliques: 6-cycle in id order copies Zero everywhere") {
  const auto c6 = generate({CycleGraph{6}, std::nullopt});
  const RunResult r =
      run(c6, protocols::two_cliques_simsync(), Model::kSimSync, fixed({1, 2, 3, 4, 5, 6}));
  CHECK(count_flag(r.board, Flag::kZero) == 6);
  CHECK(count_flag(r.board, Flag::kNo) == 0);
  CHECK_FALSE(std::get<BooleanOutput>(r.output).value);
}

TEST_CASE("two-cliques: 6-cycle, node 3 sees both labels") {
  const auto c6 = generate({CycleGraph{6}, std::nullopt});
  const RunResult r =
      run(c6, protocols::two_cliques_simsync(), Model::kSimSync, fixed({1, 4, 2, 3, 5, 6}));
  REQUIRE(payload_of(r.board, 3) != nullptr);
  CHECK(payload_of(r.board, 3)->front().is_flag(Flag::kNo));
  CHECK_FALSE(std::get<BooleanOutput>(r.output).value);
}

TEST_CASE("two-cliques: both 2-regular shapes on 6 nodes, all 720 schedules") {
  for (const auto& g : {generate({TwoCliquesGraph{3}, std::nullopt}),
                        generate({CycleGraph{6}, std::nullopt})}) {
    const bool expected = !is_connected(g);
    SweepOptions plain;
    plain.memoize = false;
    const SweepReport r = sweep(
        g, protocols::two_cliques_simsync(), Model::kSimSync,
        [&](const Output& o) {
          return std::get<BooleanOutput>(o).value == expected ? Verdict::Correct()
                                                              : Verdict::Incorrect("wrong");
        },
        plain);
    CHECK(r.completed_runs == 720);
    CHECK(r.failures.empty());
  }
}

// --- square on class C ------------------------------------------------------

LabeledGraph class_c(const LabeledGraph& h, NodeId i, NodeId j) {
  return generate({ClassC{i, j}, h});
}

TEST_CASE("square-c: path base") {
  const auto path = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});
  for (auto [j, expected] : {std::pair{3, false}, std::pair{2, true}}) {
    const auto g = class_c(path, 1, j);
    CHECK(testing::square_by_common_neighbors(testing::matrix_of(g)) == expected);
    const SweepReport r = sweep(g, protocols::square_class_c_freeasync(), Model::kFreeAsync, {});
    CHECK(r.clean());
    REQUIRE(r.outcomes.size() == 1);
    CHECK(std::get<BooleanOutput>(r.outcomes.front()).value == expected);
  }
}

TEST_CASE("square-c: single-edge base writes Yes from both feet") {
  const auto g = class_c(LabeledGraph::FromEdges(2, {{1, 2}}), 1, 2);
  const RunResult r =
      run(g, protocols::square_class_c_freeasync(), Model::kFreeAsync, make_scheduler(MinId{}));
  CHECK(std::get<BooleanOutput>(r.output).value);
  CHECK(count_flag(r.board, Flag::kYes) == 2);
  CHECK(payload_of(r.board, 1)->front().is_flag(Flag::kYes));
  CHECK(payload_of(r.board, 2)->front().is_flag(Flag::kYes));
}

TEST_CASE("square-c: low nodes compose the same message in every schedule") {
  const auto h = LabeledGraph::FromEdges(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto g = class_c(h, 1, 4);
  SweepOptions opts;
  opts.memoize = false;
  std::set<std::vector<std::pair<NodeId, Payload>>> low_messages;
  opts.on_leaf = [&](const Simulator&, const ExecutionState& s, const Output&,
                     std::span<const NodeId>) {
    std::vector<std::pair<NodeId, Payload>> low;
    for (const Message& m : s.board) {
      if (m.author <= 4) low.emplace_back(m.author, m.payload);
    }
    std::sort(low.begin(), low.end());
    low_messages.insert(low);
  };
  const SweepReport r = sweep(g, protocols::square_class_c_freeasync(), Model::kFreeAsync, {}, opts);
  CHECK(r.completed_runs == 24 * 24);
  CHECK(low_messages.size() == 1);
}

TEST_CASE("square-c: every square-free base up to 3 nodes, every pair") {
  for (int n = 2; n <= 3; ++n) {
    for_each_graph(n, [&](const LabeledGraph& h) {
      if (testing::square_by_common_neighbors(testing::matrix_of(h))) return;
      for (NodeId i = 1; i <= n; ++i) {
        for (NodeId j = i + 1; j <= n; ++j) {
          const auto g = class_c(h, i, j);
          const bool expected = testing::square_by_common_neighbors(testing::matrix_of(g));
          const SweepReport r =
              sweep(g, protocols::square_class_c_freeasync(), Model::kFreeAsync, {});
          REQUIRE(r.clean());
          REQUIRE(r.outcomes.size() == 1);
          REQUIRE(std::get<BooleanOutput>(r.outcomes.front()).value == expected);
        }
      }
    });
  }
}

TEST_CASE("square-c: malformed boards are reported at decide") {
  // No high-high edge at all.
  const auto g = LabeledGraph::FromEdges(4, {{1, 3}, {2, 4}});
  CHECK_THROWS_AS(
      run(g, protocols::square_class_c_freeasync(), Model::kFreeAsync, make_scheduler(MinId{})),
      MalformedInstance);
}

// --- spanning tree ------------------------------------------------------------

TEST_CASE("spanning tree: path forces the chain") {
  const auto path = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});
  const SweepReport r = sweep(path, protocols::spanning_tree_freeasync(1), Model::kFreeAsync, {});
  REQUIRE(r.outcomes.size() == 1);
  CHECK(std::get<ParentMap>(r.outcomes.front()).parent == std::map<NodeId, NodeId>{{2, 1}, {3, 2}});
}

TEST_CASE("spanning tree: triangle, schedule 1,2,3") {
  const auto k3 = LabeledGraph::FromEdges(3, {{1, 2}, {1, 3}, {2, 3}});
  const RunResult r =
      run(k3, protocols::spanning_tree_freeasync(1), Model::kFreeAsync, fixed({1, 2, 3}));
  const auto& tree = std::get<ParentMap>(r.output);
  CHECK(tree.root == 1);
  CHECK(tree.parent == std::map<NodeId, NodeId>{{2, 1}, {3, 1}});
  CHECK(r.board[2].created_at == 1);
}

TEST_CASE("spanning tree: disconnected input deadlocks") {
  const auto g = LabeledGraph::FromEdges(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(
      run(g, protocols::spanning_tree_freeasync(1), Model::kFreeAsync, make_scheduler(MinId{})),
      DeadlockError);
}

TEST_CASE("spanning tree: every connected graph n <= 4, every root") {
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const LabeledGraph& g) {
      if (!testing::expected_bfs(g, 1).connected) return;
      for (NodeId r = 1; r <= n; ++r) {
        const SweepReport rep = sweep(g, protocols::spanning_tree_freeasync(r), Model::kFreeAsync, {});
        REQUIRE(rep.clean());
        for (const Output& o : rep.outcomes) {
          REQUIRE(testing::is_spanning_tree(g, r, std::get<ParentMap>(o).parent));
        }
      }
    });
  }
}

// --- BFS ------------------------------------------------------------------------

TEST_CASE("bfs: 4-cycle phase accounting") {
  const auto c4 = generate({CycleGraph{4}, std::nullopt});
  SweepOptions opts;
  opts.memoize = false;
  opts.on_leaf = [](const Simulator& sim, const ExecutionState& s, const Output&,
                    std::span<const NodeId>) {
    const auto ledger = protocols::read_bfs_board(s.board.view(), sim.order());
    REQUIRE(ledger.closed_phases() >= 2);
    CHECK(ledger.edges_to_next[0] == 2);
    CHECK(ledger.edges_to_next[1] == 2);
    for (const Message& m : s.board) {
      const auto f = protocols::decode_bfs(m.payload);
      REQUIRE(f.has_value());
      if (f->layer == 1) CHECK((f->a == 1 && f->b == 1 && f->c == 0));
      if (f->layer == 2) CHECK(f->a == 2);
    }
  };
  const SweepReport r = sweep(c4, protocols::bfs_freesync(1), Model::kFreeSync, {}, opts);
  CHECK(r.clean());
  REQUIRE(r.outcomes.size() == 1);
  const auto& tree = std::get<ParentMap>(r.outcomes.front());
  CHECK(tree.layer == std::map<NodeId, int>{{1, 0}, {2, 1}, {3, 2}, {4, 1}});
  CHECK(tree.parent == std::map<NodeId, NodeId>{{2, 1}, {3, 2}, {4, 1}});
}

TEST_CASE("bfs: triangle with pendant, same-layer edge counted once") {
  const auto g = LabeledGraph::FromEdges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  SweepOptions opts;
  opts.memoize = false;
  std::set<std::pair<int, int>> c_values;
  opts.on_leaf = [&](const Simulator& sim, const ExecutionState& s, const Output&,
                     std::span<const NodeId>) {
    const auto ledger = protocols::read_bfs_board(s.board.view(), sim.order());
    REQUIRE(ledger.closed_phases() >= 2);
    CHECK(ledger.edges_to_next[1] == 1);
    int c2 = -1;
    int c3 = -1;
    for (const Message& m : s.board) {
      const auto f = protocols::decode_bfs(m.payload);
      if (m.author == 2) c2 = f->c;
      if (m.author == 3) c3 = f->c;
    }
    CHECK(c2 + c3 == 1);
    c_values.emplace(c2, c3);
  };
  const SweepReport r = sweep(g, protocols::bfs_freesync(1), Model::kFreeSync, {}, opts);
  CHECK(r.clean());
  CHECK(c_values.size() == 2);
}

TEST_CASE("bfs: disconnected input writes Unreachable") {
  const auto g = LabeledGraph::FromEdges(4, {{1, 2}, {3, 4}});
  const SweepReport r = sweep(g, protocols::bfs_freesync(1), Model::kFreeSync, {});
  CHECK(r.clean());
  REQUIRE(r.outcomes.size() == 1);
  CHECK(std::holds_alternative<NotConnected>(r.outcomes.front()));
  const RunResult one =
      run(g, protocols::bfs_freesync(1), Model::kFreeSync, make_scheduler(MaxId{}));
  CHECK(one.board.size() == 4);
  CHECK(count_flag(one.board, Flag::kUnreachable) == 2);
  CHECK(payload_of(one.board, 3)->front().is_flag(Flag::kUnreachable));
  CHECK(payload_of(one.board, 4)->front().is_flag(Flag::kUnreachable));
}

void check_bfs_everywhere(const Protocol& p, Model m, const LabeledGraph& g, NodeId root) {
  const auto expected = testing::expected_bfs(g, root);
  SweepOptions opts;
  opts.on_leaf = [&](const Simulator& sim, const ExecutionState& s, const Output&,
                     std::span<const NodeId>) {
    const auto ledger = protocols::read_bfs_board(s.board.view(), sim.order());
    for (std::size_t i = 0; i < expected.edges_between.size(); ++i) {
      REQUIRE(i < ledger.edges_to_next.size());
      REQUIRE(ledger.edges_to_next[i] == expected.edges_between[i]);
    }
  };
  const SweepReport r = sweep(g, p, m, {}, opts);
  REQUIRE(r.clean());
  REQUIRE(r.outcomes.size() == 1);
  if (!expected.connected) {
    REQUIRE(std::holds_alternative<NotConnected>(r.outcomes.front()));
    return;
  }
  const auto& tree = std::get<ParentMap>(r.outcomes.front());
  REQUIRE(tree.root == root);
  REQUIRE(tree.layer == expected.layer);
  REQUIRE(tree.parent == expected.parent);
}

TEST_CASE("bfs: every graph n <= 4, every root") {
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const LabeledGraph& g) {
      for (NodeId r = 1; r <= n; ++r) check_bfs_everywhere(protocols::bfs_freesync(r), Model::kFreeSync, g, r);
    });
  }
}

bool bipartite(const LabeledGraph& g) {
  const auto d = testing::floyd_warshall(g);
  for (const auto& [u, v] : g.edges()) {
    for (int s = 1; s <= g.order(); ++s) {
      if (d[s][u] != testing::kInf && d[s][u] == d[s][v]) return false;
    }
  }
  return true;
}

TEST_CASE("bfs-bipartite: examples") {
  const auto path = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});
  const RunResult r =
      run(path, protocols::bfs_bipartite_freeasync(1), Model::kFreeAsync, make_scheduler(MinId{}));
  const auto& tree = std::get<ParentMap>(r.output);
  CHECK(tree.layer == std::map<NodeId, int>{{1, 0}, {2, 1}, {3, 2}});
  CHECK(tree.parent == std::map<NodeId, NodeId>{{2, 1}, {3, 2}});

  const auto c4 = generate({CycleGraph{4}, std::nullopt});
  const auto a = sweep(c4, protocols::bfs_bipartite_freeasync(1), Model::kFreeAsync, {});
  const auto b = sweep(c4, protocols::bfs_freesync(1), Model::kFreeSync, {});
  CHECK(a.outcomes == b.outcomes);

  const auto k22 = LabeledGraph::FromEdges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const auto k = sweep(k22, protocols::bfs_bipartite_freeasync(1), Model::kFreeAsync, {});
  REQUIRE(k.outcomes.size() == 1);
  const auto& kt = std::get<ParentMap>(k.outcomes.front());
  CHECK(kt.layer == std::map<NodeId, int>{{1, 0}, {2, 2}, {3, 1}, {4, 1}});
  CHECK(kt.parent == std::map<NodeId, NodeId>{{2, 3}, {3, 1}, {4, 1}});
}

TEST_CASE("bfs-bipartite: every bipartite graph n <= 5, every root") {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const LabeledGraph& g) {
      if (!bipartite(g)) return;
      for (NodeId r = 1; r <= n; ++r) {
        check_bfs_everywhere(protocols::bfs_bipartite_freeasync(r), Model::kFreeAsync, g, r);
      }
    });
  }
}

TEST_CASE("bfs payload decoding") {
  CHECK_FALSE(protocols::decode_bfs({Field::Of(Flag::kUnreachable)}).has_value());
  const auto f = protocols::decode_bfs(
      {Field::Count(2), Field::Id(4), Field::Count(1), Field::Count(3), Field::Count(1)});
  REQUIRE(f.has_value());
  CHECK(f->layer == 2);
  CHECK(f->parent == 4);
  CHECK(f->a == 1);
  CHECK(f->b == 3);
  CHECK(f->c == 1);
}

// --- num-edges and shared properties ----------------------------------------------

TEST_CASE("num-edges examples") {
  const auto min_id = make_scheduler(MinId{});
  const auto k3 = LabeledGraph::FromEdges(3, {{1, 2}, {1, 3}, {2, 3}});
  const auto path = LabeledGraph::FromEdges(3, {{1, 2}, {2, 3}});
  CHECK(std::get<CountOutput>(run(k3, protocols::num_edges_simasync(), Model::kSimAsync, min_id).output).value == 3);
  CHECK(std::get<CountOutput>(run(path, protocols::num_edges_simasync(), Model::kSimAsync, min_id).output).value == 2);
  CHECK(std::get<CountOutput>(run(LabeledGraph(4), protocols::num_edges_simasync(), Model::kSimAsync, min_id).output).value == 0);
}

TEST_CASE("num-edges rejects an odd degree sum") {
  const Protocol p = protocols::num_edges_simasync();
  const Message m{1, 0, {Field::Count(1)}};
  CHECK_THROWS_AS(p.decide(BoardView(std::span<const Message>(&m, 1)), 2), OddDegreeSum);
}

TEST_CASE("by_name") {
  for (const char* name : {"mis", "two-cliques", "square-c", "spanning-tree", "bfs",
                           "bfs-bipartite", "num-edges"}) {
    const auto p = protocols::by_name(name, 1, 1);
    REQUIRE(p.has_value());
  }
  CHECK(protocols::by_name("mis", 2, std::nullopt)->target_model == Model::kSimSync);
  CHECK(protocols::by_name("bfs", std::nullopt, 1)->target_model == Model::kFreeSync);
  CHECK_FALSE(protocols::by_name("dfs", 1, 1).has_value());
  CHECK_THROWS_AS(protocols::by_name("mis", std::nullopt, std::nullopt), InvalidSpec);
  CHECK_THROWS_AS(protocols::by_name("bfs", std::nullopt, std::nullopt), InvalidSpec);
}

TEST_CASE("every message fits the default budget (n = 20, 30 random graphs)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledGraph g(20);
    for (NodeId u = 1; u <= 20; ++u) {
      for (NodeId v = u + 1; v <= 20; ++v) {
        if (v == u + 1 || rng() % 4 == 0) g.add_edge(u, v);
      }
    }
    const auto sched = make_scheduler(SeededRandom{rng()});
    const int budget = BudgetConfig{}.payload_budget(20);
    for (const Protocol& p : {protocols::mis_simsync(1), protocols::spanning_tree_freeasync(1),
                              protocols::bfs_freesync(1), protocols::num_edges_simasync()}) {
      const RunResult r = run(g, p, p.target_model, sched);
      CHECK(r.stats.max_payload_bits <= budget);
    }
  }
}

}  // namespace
}  // namespace whiteboard
