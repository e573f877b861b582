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


#include "whiteboard/verify.hpp"

#include <sstream>

namespace whiteboard::verify {

namespace {

std::string str(const std::set<NodeId>& s) {
  std::ostringstream os;
  os << "{";
  for (auto it = s.begin(); it != s.end(); ++it) os << (it == s.begin() ? "" : ",") << *it;
  os << "}";
  return os.str();
}

[[noreturn]] void mismatch(const ProblemInstance& problem, const Output& out) {
  throw TagMismatch("output '" + describe(out) + "' does not answer " +
                    to_string(problem.problem));
}

Verdict check_boolean(bool expected, const Output& out, const ProblemInstance& problem) {
  bool answer = false;
  if (const auto* b = std::get_if<BooleanOutput>(&out)) {
    answer = b->value;
  } else if (problem.problem == Problem::kConnectivity && std::holds_alternative<NotConnected>(out)) {
    answer = false;
  } else {
    mismatch(problem, out);
  }
  if (answer == expected) return Verdict::Correct();
  return Verdict::Incorrect(std::string("answered ") + (answer ? "true" : "false") +
                            ", expected " + (expected ? "true" : "false"));
}

// Parent pointers of every non-root vertex, each an edge of g, all leading
// to r without revisiting a vertex.
Verdict check_tree(const LabeledGraph& g, NodeId r, const ParentMap& tree) {
  if (tree.root != r) {
    return Verdict::Incorrect("rooted at " + std::to_string(tree.root) + ", expected " +
                              std::to_string(r));
  }
  if (tree.parent.contains(r)) return Verdict::Incorrect("root has a parent");
  if (static_cast<int>(tree.parent.size()) != g.order() - 1) {
    return Verdict::Incorrect(std::to_string(tree.parent.size()) + " tree edges, expected " +
                              std::to_string(g.order() - 1));
  }
  for (const auto& [child, parent] : tree.parent) {
    if (!g.contains(child) || !g.contains(parent) || !g.adjacent(child, parent)) {
      return Verdict::Incorrect("tree edge " + std::to_string(child) + "-" +
                                std::to_string(parent) + " is not an edge of the graph");
    }
  }
  for (NodeId v = 1; v <= g.order(); ++v) {
    NodeId at = v;
    for (int hops = 0; at != r; ++hops) {
      if (hops > g.order()) {
        return Verdict::Incorrect("cycle through " + std::to_string(v));
      }
      auto it = tree.parent.find(at);
      if (it == tree.parent.end()) {
        return Verdict::Incorrect("node " + std::to_string(at) + " has no parent");
      }
      at = it->second;
    }
  }
  return Verdict::Correct();
}

Verdict check_spanning_tree(const LabeledGraph& g, NodeId r, const Output& out,
                            const ProblemInstance& problem) {
  const bool connected = is_connected(g);
  if (std::holds_alternative<NotConnected>(out)) {
    return connected ? Verdict::Incorrect("graph is connected") : Verdict::Correct();
  }
  const auto* tree = std::get_if<ParentMap>(&out);
  if (!tree) mismatch(problem, out);
  if (!connected) return Verdict::Incorrect("graph is disconnected; no spanning tree exists");
  return check_tree(g, r, *tree);
}

Verdict check_bfs(const LabeledGraph& g, NodeId r, const Output& out,
                  const ProblemInstance& problem) {
  const Verdict as_tree = check_spanning_tree(g, r, out, problem);
  if (!as_tree || std::holds_alternative<NotConnected>(out)) return as_tree;
  const auto& tree = std::get<ParentMap>(out);
  const LayerMap truth = bfs_layers(g, r);
  if (tree.layer.size() != truth.size()) return Verdict::Incorrect("layer map incomplete");
  for (const auto& [v, layer] : truth) {
    auto it = tree.layer.find(v);
    if (it == tree.layer.end() || it->second != *layer) {
      return Verdict::Incorrect("node " + std::to_string(v) + " in wrong layer");
    }
  }
  for (const auto& [child, parent] : tree.parent) {
    if (*truth.at(parent) != *truth.at(child) - 1) {
      return Verdict::Incorrect("parent of " + std::to_string(child) + " not one layer closer");
    }
  }
  return Verdict::Correct();
}

}  // namespace

AdjacencyMatrix adjacency_of(const LabeledGraph& g) {
  AdjacencyMatrix m;
  m.rows.assign(static_cast<std::size_t>(g.order()),
                std::vector<bool>(static_cast<std::size_t>(g.order()), false));
  for (const auto& [u, v] : g.edges()) {
    m.rows[u - 1][v - 1] = true;
    m.rows[v - 1][u - 1] = true;
  }
  return m;
}

Verdict check_output(const ProblemInstance& problem, const LabeledGraph& g, const Output& out) {
  problem.validate(g.order());
  switch (problem.problem) {
    case Problem::kMis: {
      const auto* set = std::get_if<VertexSet>(&out);
      if (!set) mismatch(problem, out);
      if (mis_valid(g, *problem.distinguished, set->ids)) return Verdict::Correct();
      return Verdict::Incorrect(str(set->ids) + " is not a maximal independent set containing " +
                                std::to_string(*problem.distinguished));
    }
    case Problem::kTwoCliques:
      return check_boolean(is_two_cliques(g), out, problem);
    case Problem::kSquare:
      return check_boolean(has_square(g), out, problem);
    case Problem::kConnectivity:
      return check_boolean(is_connected(g), out, problem);
    case Problem::kSpanningTree:
      return check_spanning_tree(g, *problem.distinguished, out, problem);
    case Problem::kBfs:
      return check_bfs(g, *problem.distinguished, out, problem);
    case Problem::kNumEdges: {
      const auto* count = std::get_if<CountOutput>(&out);
      if (!count) mismatch(problem, out);
      if (count->value == static_cast<long long>(g.edge_count())) return Verdict::Correct();
      return Verdict::Incorrect("counted " + std::to_string(count->value) + " edges, graph has " +
                                std::to_string(g.edge_count()));
    }
    case Problem::kBuild: {
      const auto* matrix = std::get_if<AdjacencyMatrix>(&out);
      if (!matrix) mismatch(problem, out);
      if (*matrix == adjacency_of(g)) return Verdict::Correct();
      return Verdict::Incorrect("adjacency matrix differs");
    }
  }
  mismatch(problem, out);
}

}  // namespace whiteboard::verify
