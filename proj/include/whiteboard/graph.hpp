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

#ifndef WHITEBOARD_GRAPH_HPP_
#define WHITEBOARD_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace whiteboard {

// Node identifiers are 1-based; 0 is reserved for "none" in payloads.
using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

/**
 * Simple undirected graph on the identifiers {1, ..., n}.
 *
 * Neighbor lists are kept sorted; an adjacency matrix backs O(1) edge
 * queries. Self-loops and duplicate edges are rejected at insertion.
 */
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);

  static LabeledGraph FromEdges(int n, std::span<const Edge> edges);
  static LabeledGraph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  bool contains(NodeId v) const { return v >= 1 && v <= n_; }

  // Throws InvalidGraph on out-of-range ids, self-loops or repeated edges.
  void add_edge(NodeId u, NodeId v);

  bool adjacent(NodeId u, NodeId v) const;
  const std::vector<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  std::size_t edge_count() const { return edge_count_; }

  // All edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const LabeledGraph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  void check_id(NodeId v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<NodeId>> adjacency_;  // index v - 1
  std::vector<std::uint8_t> matrix_;            // row-major n x n
};

std::ostream& operator<<(std::ostream& os, const LabeledGraph& g);

// ---------------------------------------------------------------------------
// Problems

enum class Problem {
  kMis,
  kTwoCliques,
  kSquare,
  kSpanningTree,
  kBfs,
  kConnectivity,
  kNumEdges,
  kBuild,
};

std::string to_string(Problem problem);
std::optional<Problem> problem_from_string(std::string_view name);

struct ProblemInstance {
  Problem problem = Problem::kConnectivity;
  // x for MIS, r for SpanningTree / BFS.
  std::optional<NodeId> distinguished;

  // Throws InvalidSpec if a required identifier is missing or exceeds n.
  void validate(int n) const;
};

// ---------------------------------------------------------------------------
// Ground-truth oracles

// True iff four distinct vertices a, b, c, d form the cycle a-b-c-d-a.
// O(n^4) brute force over ordered tuples.
bool has_square(const LabeledGraph& g);

// Distance from r per identifier; std::nullopt marks unreachable vertices.
using LayerMap = std::map<NodeId, std::optional<int>>;
LayerMap bfs_layers(const LabeledGraph& g, NodeId r);

bool is_connected(const LabeledGraph& g);

// Component of v, ascending.
std::vector<NodeId> component_of(const LabeledGraph& g, NodeId v);

// Direct check of K_k + K_k. Throws NotInInputClass unless g has even order
// 2k and every vertex has degree k - 1.
bool is_two_cliques(const LabeledGraph& g);

// Same question answered through "two cliques iff disconnected".
bool is_two_cliques_via_connectivity(const LabeledGraph& g);

bool is_independent(const LabeledGraph& g, const std::set<NodeId>& s);
bool mis_valid(const LabeledGraph& g, NodeId x, const std::set<NodeId>& s);

// ---------------------------------------------------------------------------
// Gadgets

struct MisGadget {
  NodeId i;
  NodeId j;
};
struct ClassC {
  NodeId i;
  NodeId j;
};
struct BfsGadget {
  NodeId i;
};
struct TwoCliquesGraph {
  int n;  // clique size; result has 2n nodes
};
struct CycleGraph {
  int n;
};
struct PathGraph {
  int n;
};

using GadgetKind =
    std::variant<MisGadget, ClassC, BfsGadget, TwoCliquesGraph, CycleGraph, PathGraph>;

struct GadgetSpec {
  GadgetKind kind;
  std::optional<LabeledGraph> base;  // H, for gadgets extending a base graph
};

/**
 * Builds the graph described by `spec`.
 *
 * Identifier layout:
 *   MisGadget(i,j): H on 1..n, x = n+1 adjacent to every v_k with k not in {i,j}.
 *   ClassC(i,j):    H on 1..n, pendant v_{n+k} on v_k, plus edge v_{n+i}v_{n+j}.
 *   BfsGadget(i):   v_1..v_n, r = n+1, a_1..a_n, then b_j (j != i), then c_j
 *                   (j != i), all in ascending j; 4n - 1 nodes.
 *
 * Throws InvalidSpec on bad indices, a missing base, or a ClassC base that
 * contains a square.
 */
LabeledGraph generate(const GadgetSpec& spec);

// Identifiers of the named BfsGadget vertices, for tests and tools.
struct BfsGadgetLayout {
  int base_order;
  NodeId skipped;
  NodeId root() const { return base_order + 1; }
  NodeId a(int j) const { return base_order + 1 + j; }
  NodeId b(int j) const;
  NodeId c(int j) const;
};

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kDefaultEnumerationCap = 7;

// Graph whose edge set is `mask`: bit k set means the k-th pair (u < v) in
// ascending lexicographic order is an edge.
LabeledGraph graph_from_mask(int n, std::uint64_t mask);

using GraphFilter = std::function<bool(const LabeledGraph&)>;

// Visits all 2^(n(n-1)/2) labeled graphs on n nodes in ascending mask order.
// Throws CapExceeded when n > cap.
void for_each_graph(int n, const std::function<void(const LabeledGraph&)>& visit,
                    int cap = kDefaultEnumerationCap);

std::vector<LabeledGraph> enumerate_graphs(int n, const GraphFilter& filter = {},
                                           int cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// File format

// `# whiteboard-graph v1`, `n=<N>`, then one `u v` line per edge (u < v).
std::string to_graph_file(const LabeledGraph& g);
LabeledGraph parse_graph_file(std::string_view text);

LabeledGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const LabeledGraph& g);

}  // namespace whiteboard

#endif  // WHITEBOARD_GRAPH_HPP_
