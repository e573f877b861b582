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

#include "whiteboard/protocols.hpp"

namespace whiteboard::protocols {

namespace {

bool wrote_id(const Message& m) { return !m.payload.empty() && m.payload.front().is_id(); }

}  // namespace

Protocol mis_simsync(NodeId x) {
  Protocol p;
  p.name = "mis";
  p.target_model = Model::kSimSync;
  p.reads_board_order = false;
  p.compose = [x](const LocalView& view, BoardView board) -> Payload {
    if (view.self_id == x) return {Field::Id(view.self_id)};
    if (view.is_neighbor(x)) return {Field::Of(Flag::kNo)};
    const bool neighbor_in_set = std::any_of(board.begin(), board.end(), [&](const Message& m) {
      return wrote_id(m) && view.is_neighbor(m.author);
    });
    if (neighbor_in_set) return {Field::Of(Flag::kNo)};
    return {Field::Id(view.self_id)};
  };
  p.decide = [](BoardView board, int) -> Output {
    VertexSet out;
    for (const Message& m : board) {
      if (wrote_id(m)) out.ids.insert(m.author);
    }
    return out;
  };
  return p;
}

Protocol two_cliques_simsync() {
  Protocol p;
  p.name = "two-cliques";
  p.target_model = Model::kSimSync;
  p.reads_board_order = false;
  p.compose = [](const LocalView& view, BoardView board) -> Payload {
    if (board.empty()) return {Field::Of(Flag::kZero)};
    std::optional<Flag> common;
    bool any = false;
    for (const Message& m : board) {
      if (!view.is_neighbor(m.author)) continue;
      const Flag label = m.payload.at(0).flag();
      if (label == Flag::kNo || (any && label != *common)) return {Field::Of(Flag::kNo)};
      common = label;
      any = true;
    }
    return {Field::Of(any ? *common : Flag::kOne)};
  };
  p.decide = [](BoardView board, int n) -> Output {
    int zeros = 0;
    int ones = 0;
    for (const Message& m : board) {
      const Field& f = m.payload.at(0);
      if (f.is_flag(Flag::kNo)) return BooleanOutput{false};
      if (f.is_flag(Flag::kZero)) ++zeros;
      if (f.is_flag(Flag::kOne)) ++ones;
    }
    return BooleanOutput{n % 2 == 0 && zeros == n / 2 && ones == n / 2};
  };
  return p;
}

namespace {

// Pendant-layer edges visible on a class C board: pairs (p, q), p < q, both
// above n/2, plus each pendant node's foot in the base graph.
struct PendantEdges {
  std::vector<std::pair<NodeId, NodeId>> high_edges;
  std::vector<NodeId> foot;  // index by pendant id

  explicit PendantEdges(BoardView board, int n) : foot(static_cast<std::size_t>(n) + 1, 0) {
    const int half = n / 2;
    for (const Message& m : board) {
      if (m.author <= half) continue;
      for (const Field& f : m.payload) {
        if (!f.is_id() || f.value == 0) continue;
        if (f.value > half) {
          if (m.author < f.value) high_edges.emplace_back(m.author, f.value);
        } else {
          foot[m.author] = f.value;
        }
      }
    }
  }
};

}  // namespace

Protocol square_class_c_freeasync() {
  Protocol p;
  p.name = "square-c";
  p.target_model = Model::kFreeAsync;
  p.reads_board_order = false;
  p.activation = [](const LocalView& view, BoardView board) {
    const int half = view.n / 2;
    if (view.self_id > half) return board.empty();
    return static_cast<int>(board.size()) >= half;
  };
  p.compose = [](const LocalView& view, BoardView board) -> Payload {
    const int half = view.n / 2;
    if (view.self_id > half) {
      Payload out;
      for (NodeId w : view.neighbor_ids) out.push_back(Field::Id(w));
      while (out.size() < 2) out.push_back(Field::Id(0));
      return out;
    }
    const PendantEdges seen(board, view.n);
    if (seen.high_edges.size() != 1) return {Field::Of(Flag::kEmpty)};
    const NodeId u = seen.foot[seen.high_edges[0].first];
    const NodeId w = seen.foot[seen.high_edges[0].second];
    if (view.self_id != u && view.self_id != w) return {Field::Of(Flag::kEmpty)};
    const NodeId other = view.self_id == u ? w : u;
    return {Field::Of(view.is_neighbor(other) ? Flag::kYes : Flag::kNo)};
  };
  p.decide = [](BoardView board, int n) -> Output {
    const PendantEdges seen(board, n);
    if (seen.high_edges.size() != 1) {
      throw MalformedInstance("class C board shows " + std::to_string(seen.high_edges.size()) +
                              " pendant-layer edges, expected 1");
    }
    const bool yes = std::any_of(board.begin(), board.end(), [](const Message& m) {
      return !m.payload.empty() && m.payload.front().is_flag(Flag::kYes);
    });
    return BooleanOutput{yes};
  };
  return p;
}

Protocol spanning_tree_freeasync(NodeId r) {
  Protocol p;
  p.name = "spanning-tree";
  p.target_model = Model::kFreeAsync;
  p.reads_board_order = false;
  p.activation = [r](const LocalView& view, BoardView board) {
    if (view.self_id == r) return board.empty();
    return std::any_of(board.begin(), board.end(),
                       [&](const Message& m) { return view.is_neighbor(m.author); });
  };
  p.compose = [r](const LocalView& view, BoardView board) -> Payload {
    if (view.self_id == r) return {Field::Of(Flag::kRoot)};
    NodeId parent = 0;
    for (const Message& m : board) {
      if (view.is_neighbor(m.author) && (parent == 0 || m.author < parent)) parent = m.author;
    }
    return {Field::Id(parent)};
  };
  p.decide = [](BoardView board, int) -> Output {
    ParentMap out;
    for (const Message& m : board) {
      const Field& f = m.payload.at(0);
      if (f.is_flag(Flag::kRoot)) {
        out.root = m.author;
      } else if (f.is_id()) {
        out.parent[m.author] = f.value;
      }
    }
    return out;
  };
  return p;
}

Protocol num_edges_simasync() {
  Protocol p;
  p.name = "num-edges";
  p.target_model = Model::kSimAsync;
  p.reads_board_order = false;
  p.compose = [](const LocalView& view, BoardView) -> Payload {
    return {Field::Count(view.degree())};
  };
  p.decide = [](BoardView board, int) -> Output {
    long long total = 0;
    for (const Message& m : board) total += m.payload.at(0).value;
    if (total % 2 != 0) throw OddDegreeSum("degree sum " + std::to_string(total) + " is odd");
    return CountOutput{total / 2};
  };
  return p;
}

std::optional<Protocol> by_name(std::string_view name, std::optional<NodeId> x,
                                std::optional<NodeId> root) {
  auto need = [](std::optional<NodeId> v, const char* flag) {
    if (!v) throw InvalidSpec(std::string("protocol needs ") + flag);
    return *v;
  };
  if (name == "mis") return mis_simsync(need(x, "--x"));
  if (name == "two-cliques") return two_cliques_simsync();
  if (name == "square-c") return square_class_c_freeasync();
  if (name == "spanning-tree") return spanning_tree_freeasync(need(root, "--root"));
  if (name == "bfs") return bfs_freesync(need(root, "--root"));
  if (name == "bfs-bipartite") return bfs_bipartite_freeasync(need(root, "--root"));
  if (name == "num-edges") return num_edges_simasync();
  return std::nullopt;
}

}  // namespace whiteboard::protocols
