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


#include "whiteboard/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

#include "whiteboard/errors.hpp"

namespace whiteboard {

LabeledGraph::LabeledGraph(int n) : n_(n) {
  if (n < 0) throw InvalidGraph("negative node count");
  adjacency_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

LabeledGraph LabeledGraph::FromEdges(int n, std::span<const Edge> edges) {
  LabeledGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void LabeledGraph::check_id(NodeId v) const {
  if (!contains(v)) {
    throw InvalidGraph("identifier " + std::to_string(v) + " outside 1.." +
                       std::to_string(n_));
  }
}

void LabeledGraph::add_edge(NodeId u, NodeId v) {
  check_id(u);
  check_id(v);
  if (u == v) throw InvalidGraph("self-loop on " + std::to_string(u));
  if (adjacent(u, v)) {
    throw InvalidGraph("repeated edge " + std::to_string(u) + " " + std::to_string(v));
  }
  const auto un = static_cast<std::size_t>(n_);
  matrix_[(u - 1) * un + (v - 1)] = 1;
  matrix_[(v - 1) * un + (u - 1)] = 1;
  auto insert_sorted = [](std::vector<NodeId>& list, NodeId w) {
    list.insert(std::upper_bound(list.begin(), list.end(), w), w);
  };
  insert_sorted(adjacency_[u - 1], v);
  insert_sorted(adjacency_[v - 1], u);
  ++edge_count_;
}

bool LabeledGraph::adjacent(NodeId u, NodeId v) const {
  check_id(u);
  check_id(v);
  return matrix_[(u - 1) * static_cast<std::size_t>(n_) + (v - 1)] != 0;
}

const std::vector<NodeId>& LabeledGraph::neighbors(NodeId v) const {
  check_id(v);
  return adjacency_[v - 1];
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 1; u <= n_; ++u) {
    for (NodeId v : adjacency_[u - 1]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LabeledGraph& g) {
  os << "G(n=" << g.order() << ", {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << "-" << v;
    first = false;
  }
  return os << "})";
}

// ---------------------------------------------------------------------------

std::string to_string(Problem problem) {
  switch (problem) {
    case Problem::kMis: return "mis";
    case Problem::kTwoCliques: return "two-cliques";
    case Problem::kSquare: return "square";
    case Problem::kSpanningTree: return "spanning-tree";
    case Problem::kBfs: return "bfs";
    case Problem::kConnectivity: return "connectivity";
    case Problem::kNumEdges: return "num-edges";
    case Problem::kBuild: return "build";
  }
  return "?";
}

std::optional<Problem> problem_from_string(std::string_view name) {
  for (auto p : {Problem::kMis, Problem::kTwoCliques, Problem::kSquare,
                 Problem::kSpanningTree, Problem::kBfs, Problem::kConnectivity,
                 Problem::kNumEdges, Problem::kBuild}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void ProblemInstance::validate(int n) const {
  const bool needs_id = problem == Problem::kMis || problem == Problem::kSpanningTree ||
                        problem == Problem::kBfs;
  if (needs_id && !distinguished) {
    throw InvalidSpec(to_string(problem) + " needs a distinguished identifier");
  }
  if (distinguished && (*distinguished < 1 || *distinguished > n)) {
    throw InvalidSpec("identifier " + std::to_string(*distinguished) + " outside 1.." +
                      std::to_string(n));
  }
}

// ---------------------------------------------------------------------------

bool has_square(const LabeledGraph& g) {
  const int n = g.order();
  for (NodeId a = 1; a <= n; ++a) {
    for (NodeId b = 1; b <= n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (NodeId c = 1; c <= n; ++c) {
        if (c == a || c == b || !g.adjacent(b, c)) continue;
        for (NodeId d = 1; d <= n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.adjacent(c, d) && g.adjacent(d, a)) return true;
        }
      }
    }
  }
  return false;
}

LayerMap bfs_layers(const LabeledGraph& g, NodeId r) {
  if (!g.contains(r)) throw InvalidSpec("root outside graph");
  LayerMap layers;
  for (NodeId v = 1; v <= g.order(); ++v) layers[v] = std::nullopt;
  layers[r] = 0;
  std::deque<NodeId> queue{r};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (!layers[w]) {
        layers[w] = *layers[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return layers;
}

std::vector<NodeId> component_of(const LabeledGraph& g, NodeId v) {
  std::vector<NodeId> out;
  for (const auto& [w, layer] : bfs_layers(g, v)) {
    if (layer) out.push_back(w);
  }
  return out;
}

bool is_connected(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  return static_cast<int>(component_of(g, 1).size()) == g.order();
}

namespace {

int two_cliques_half(const LabeledGraph& g) {
  const int order = g.order();
  if (order == 0 || order % 2 != 0) {
    throw NotInInputClass("two-cliques input needs an even, positive order");
  }
  const int half = order / 2;
  for (NodeId v = 1; v <= order; ++v) {
    if (g.degree(v) != half - 1) {
      throw NotInInputClass("two-cliques input must be " + std::to_string(half - 1) +
                            "-regular");
    }
  }
  return half;
}

}  // namespace

bool is_two_cliques(const LabeledGraph& g) {
  const int half = two_cliques_half(g);
  // Closed neighborhoods must partition V into two blocks of size `half`,
  // each a clique.
  std::vector<int> block(static_cast<std::size_t>(g.order()) + 1, -1);
  int blocks = 0;
  for (NodeId v = 1; v <= g.order(); ++v) {
    if (block[v] >= 0) continue;
    if (blocks == 2) return false;
    std::vector<NodeId> members{v};
    for (NodeId w : g.neighbors(v)) members.push_back(w);
    for (NodeId a : members) {
      if (block[a] >= 0) return false;
      for (NodeId b : members) {
        if (a != b && !g.adjacent(a, b)) return false;
      }
      block[a] = blocks;
    }
    if (static_cast<int>(members.size()) != half) return false;
    ++blocks;
  }
  return blocks == 2;
}

bool is_two_cliques_via_connectivity(const LabeledGraph& g) {
  two_cliques_half(g);
  return !is_connected(g);
}

bool is_independent(const LabeledGraph& g, const std::set<NodeId>& s) {
  for (NodeId a : s) {
    for (NodeId b : s) {
      if (a < b && g.adjacent(a, b)) return false;
    }
  }
  return true;
}

bool mis_valid(const LabeledGraph& g, NodeId x, const std::set<NodeId>& s) {
  if (!s.contains(x)) return false;
  for (NodeId v : s) {
    if (!g.contains(v)) return false;
  }
  if (!is_independent(g, s)) return false;
  for (NodeId v = 1; v <= g.order(); ++v) {
    if (s.contains(v)) continue;
    const bool dominated = std::any_of(s.begin(), s.end(),
                                       [&](NodeId w) { return g.adjacent(v, w); });
    if (!dominated) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
  LabeledGraph g(n);
  int bit = 0;
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void for_each_graph(int n, const std::function<void(const LabeledGraph&)>& visit,
                    int cap) {
  if (n < 0) throw InvalidSpec("negative node count");
  if (n > cap) {
    throw CapExceeded("enumeration of n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  const int pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw CapExceeded("edge mask does not fit 64 bits");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(n, mask));
}

std::vector<LabeledGraph> enumerate_graphs(int n, const GraphFilter& filter, int cap) {
  std::vector<LabeledGraph> out;
  for_each_graph(
      n,
      [&](const LabeledGraph& g) {
        if (!filter || filter(g)) out.push_back(g);
      },
      cap);
  return out;
}

}  // namespace whiteboard
