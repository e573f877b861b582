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

std::optional<BfsFields> decode_bfs(const Payload& payload) {
  const bool shape = (payload.size() == 5 || payload.size() == 4) && payload[0].is_count() &&
                     payload[1].is_id() && payload[2].is_count() && payload[3].is_count() &&
                     (payload.size() == 4 || payload[4].is_count());
  if (!shape) return std::nullopt;
  return BfsFields{payload[0].value, payload[1].value, payload[2].value, payload[3].value,
                   payload.size() == 5 ? payload[4].value : 0};
}

/**
 * Phase i is closed once the layer-i messages account for all e_{i-1} edges
 * coming from layer i - 1 (each layer-i node reports them as `a`). The edges
 * leaving layer i are then e_i = sum(b - 2c): `b` counts both same-layer and
 * next-layer neighbors, and each same-layer edge is reported as `c` by
 * exactly one of its endpoints, the later writer.
 */
BfsLedger read_bfs_board(BoardView board, int n) {
  BfsLedger ledger;
  ledger.layer_of.assign(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<BfsFields>> by_layer;
  for (const Message& m : board) {
    if (!m.payload.empty() && m.payload.front().is_flag(Flag::kUnreachable)) {
      ledger.unreachable_written = true;
      continue;
    }
    const auto fields = decode_bfs(m.payload);
    if (!fields) continue;
    ledger.layer_of[m.author] = fields->layer;
    if (static_cast<int>(by_layer.size()) <= fields->layer) by_layer.resize(fields->layer + 1);
    by_layer[fields->layer].push_back(*fields);
  }
  if (by_layer.empty() || by_layer[0].empty()) return ledger;

  ledger.edges_to_next.push_back(by_layer[0].front().b);
  for (std::size_t i = 1; i < by_layer.size(); ++i) {
    const int incoming = ledger.edges_to_next.back();
    if (incoming == 0) break;
    int a_sum = 0;
    int outgoing = 0;
    for (const BfsFields& f : by_layer[i]) {
      a_sum += f.a;
      outgoing += f.b - 2 * f.c;
    }
    if (a_sum != incoming) break;
    ledger.edges_to_next.push_back(outgoing);
  }
  return ledger;
}

namespace {

bool should_activate(NodeId r, const LocalView& view, BoardView board) {
  if (board.empty()) return view.self_id == r;
  const BfsLedger ledger = read_bfs_board(board, view.n);
  if (ledger.exhausted()) return static_cast<int>(board.size()) < view.n;
  // Layer i + 1 wakes once phase i is closed.
  const int last_closed = ledger.closed_phases() - 1;
  return std::any_of(view.neighbor_ids.begin(), view.neighbor_ids.end(), [&](NodeId w) {
    return ledger.layer_of[w] >= 0 && ledger.layer_of[w] <= last_closed;
  });
}

Payload compose_bfs(NodeId r, bool count_same_layer, const LocalView& view, BoardView board) {
  auto encode = [count_same_layer](int layer, NodeId parent, int a, int b, int c) {
    Payload out{Field::Count(layer), Field::Id(parent), Field::Count(a), Field::Count(b)};
    if (count_same_layer) out.push_back(Field::Count(c));
    return out;
  };
  if (view.self_id == r) return encode(0, 0, 0, view.degree(), 0);

  const BfsLedger ledger = read_bfs_board(board, view.n);
  if (ledger.exhausted()) return {Field::Of(Flag::kUnreachable)};

  int parent_layer = -1;
  for (NodeId w : view.neighbor_ids) {
    const int l = ledger.layer_of[w];
    if (l >= 0 && (parent_layer < 0 || l < parent_layer)) parent_layer = l;
  }
  if (parent_layer < 0) {
    throw MalformedInstance("node " + std::to_string(view.self_id) +
                            " composed a BFS message with no written neighbor");
  }
  NodeId parent = 0;
  int a = 0;
  int c = 0;
  for (NodeId w : view.neighbor_ids) {
    const int l = ledger.layer_of[w];
    if (l == parent_layer) {
      if (parent == 0) parent = w;  // neighbor_ids ascending
      ++a;
    } else if (l == parent_layer + 1) {
      ++c;
    }
  }
  return encode(parent_layer + 1, parent, a, view.degree() - a, c);
}

Output decide_bfs(BoardView board, int) {
  ParentMap out;
  for (const Message& m : board) {
    if (!m.payload.empty() && m.payload.front().is_flag(Flag::kUnreachable)) {
      return NotConnected{};
    }
    const auto fields = decode_bfs(m.payload);
    if (!fields) throw MalformedInstance("unexpected payload on a BFS board");
    out.layer[m.author] = fields->layer;
    if (fields->layer == 0) {
      out.root = m.author;
    } else {
      out.parent[m.author] = fields->parent;
    }
  }
  return out;
}

Protocol make_bfs(NodeId r, Model model, bool count_same_layer) {
  Protocol p;
  p.target_model = model;
  p.reads_board_order = false;
  p.activation = [r](const LocalView& view, BoardView board) {
    return should_activate(r, view, board);
  };
  p.compose = [r, count_same_layer](const LocalView& view, BoardView board) {
    return compose_bfs(r, count_same_layer, view, board);
  };
  p.decide = decide_bfs;
  return p;
}

}  // namespace

Protocol bfs_freesync(NodeId r) {
  Protocol p = make_bfs(r, Model::kFreeSync, true);
  p.name = "bfs";
  return p;
}

Protocol bfs_bipartite_freeasync(NodeId r) {
  Protocol p = make_bfs(r, Model::kFreeAsync, false);
  p.name = "bfs-bipartite";
  return p;
}

}  // namespace whiteboard::protocols
