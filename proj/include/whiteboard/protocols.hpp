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


#ifndef WHITEBOARD_PROTOCOLS_HPP_
#define WHITEBOARD_PROTOCOLS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "whiteboard/engine.hpp"

namespace whiteboard::protocols {

// Greedy rooted MIS (SimSync): v writes its id if v = x, or if v is not a
// neighbor of x and no neighbor already wrote its id; otherwise "no".
Protocol mis_simsync(NodeId x);

/**
 * 2-cliques (SimSync). The first writer says Zero; later writers copy the
 * common label of their written neighbors, say One if none is written, and
 * No on disagreement.
 *
 * decide answers true iff no No was written and the labels split exactly
 * n/2 : n/2. The split check rejects a 6-cycle written in id order, where
 * every node copies Zero and no disagreement is ever observed.
 */
Protocol two_cliques_simsync();

// SQUARE on class C graphs (FreeAsync). Ids above N/2 are the pendant layer
// and write their (at most two) neighbors at once; the remaining nodes wake
// when N/2 messages are on the board and the two feet of the pendant-layer
// edge report whether they are adjacent.
Protocol square_class_c_freeasync();

// Greedy spanning tree (FreeAsync): r writes Root, every other node wakes
// once a neighbor is written and names its minimum-id written neighbor.
// Deadlocks on disconnected inputs.
Protocol spanning_tree_freeasync(NodeId r);

// BFS tree (FreeSync) with layer-by-layer phase detection. Also answers
// connectivity: when a phase closes with no outgoing edges and nodes remain,
// they all write Unreachable.
Protocol bfs_freesync(NodeId r);

// BFS for bipartite inputs (FreeAsync): no same-layer edges, so the
// same-layer counter is dropped and messages are composed at activation.
Protocol bfs_bipartite_freeasync(NodeId r);

// Every node writes its degree; decide sums and halves (SimAsync).
Protocol num_edges_simasync();

// Protocol by CLI name: mis, two-cliques, square-c, spanning-tree, bfs,
// bfs-bipartite, num-edges. Throws InvalidSpec on a missing parameter.
std::optional<Protocol> by_name(std::string_view name, std::optional<NodeId> x,
                                std::optional<NodeId> root);

// ---------------------------------------------------------------------------
// BFS board accounting

// Fields of one layered BFS message.
struct BfsFields {
  int layer = 0;
  NodeId parent = 0;  // 0 for the root
  int a = 0;          // neighbors in layer - 1
  int b = 0;          // other neighbors
  int c = 0;          // same-layer neighbors already written (0 if absent)
};

// Decodes a layered BFS payload; nullopt for Unreachable or foreign payloads.
std::optional<BfsFields> decode_bfs(const Payload& payload);

// What every node can derive from a BFS board.
struct BfsLedger {
  // edges_to_next[i] = e_i, the number of edges between layers i and i + 1,
  // for every closed phase i.
  std::vector<int> edges_to_next;
  // Layer of each written layered author (index v, -1 if none).
  std::vector<int> layer_of;
  bool unreachable_written = false;

  int closed_phases() const { return static_cast<int>(edges_to_next.size()); }
  // Some phase closed with no edges to the next layer: BFS is over.
  bool exhausted() const { return !edges_to_next.empty() && edges_to_next.back() == 0; }
};

BfsLedger read_bfs_board(BoardView board, int n);

}  // namespace whiteboard::protocols

#endif  // WHITEBOARD_PROTOCOLS_HPP_
