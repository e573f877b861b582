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


#include <string>
#include <type_traits>

#include "whiteboard/errors.hpp"
#include "whiteboard/graph.hpp"

namespace whiteboard {

namespace {

const LabeledGraph& require_base(const GadgetSpec& spec, const char* kind) {
  if (!spec.base) throw InvalidSpec(std::string(kind) + " needs a base graph");
  return *spec.base;
}

void require_pair(const LabeledGraph& h, NodeId i, NodeId j) {
  if (!(1 <= i && i < j && j <= h.order())) {
    throw InvalidSpec("need 1 <= i < j <= " + std::to_string(h.order()) + ", got i=" +
                      std::to_string(i) + " j=" + std::to_string(j));
  }
}

void copy_edges(const LabeledGraph& from, LabeledGraph& to) {
  for (const auto& [u, v] : from.edges()) to.add_edge(u, v);
}

LabeledGraph build(const MisGadget& kind, const GadgetSpec& spec) {
  const LabeledGraph& h = require_base(spec, "mis-gadget");
  require_pair(h, kind.i, kind.j);
  const int n = h.order();
  LabeledGraph g(n + 1);
  copy_edges(h, g);
  const NodeId x = n + 1;
  for (NodeId k = 1; k <= n; ++k) {
    if (k != kind.i && k != kind.j) g.add_edge(k, x);
  }
  return g;
}

LabeledGraph build(const ClassC& kind, const GadgetSpec& spec) {
  const LabeledGraph& h = require_base(spec, "class-c");
  require_pair(h, kind.i, kind.j);
  if (has_square(h)) throw InvalidSpec("class-c base graph must be square-free");
  const int n = h.order();
  LabeledGraph g(2 * n);
  copy_edges(h, g);
  for (NodeId k = 1; k <= n; ++k) g.add_edge(k, n + k);
  g.add_edge(n + kind.i, n + kind.j);
  return g;
}

LabeledGraph build(const BfsGadget& kind, const GadgetSpec& spec) {
  const LabeledGraph& h = require_base(spec, "bfs-gadget");
  const int n = h.order();
  if (kind.i < 1 || kind.i > n) {
    throw InvalidSpec("need 1 <= i <= " + std::to_string(n));
  }
  const BfsGadgetLayout layout{n, kind.i};
  LabeledGraph g(4 * n - 1);
  copy_edges(h, g);
  for (int j = 1; j <= n; ++j) g.add_edge(layout.root(), layout.a(j));
  for (int j = 1; j <= n; ++j) {
    if (j == kind.i) continue;
    g.add_edge(layout.b(j), j);
    g.add_edge(layout.c(j), layout.a(j));
    g.add_edge(layout.c(j), layout.b(j));
  }
  g.add_edge(layout.a(kind.i), kind.i);
  return g;
}

LabeledGraph build(const TwoCliquesGraph& kind, const GadgetSpec&) {
  if (kind.n < 1) throw InvalidSpec("two-cliques needs n >= 1");
  LabeledGraph g(2 * kind.n);
  for (int offset : {0, kind.n}) {
    for (NodeId u = 1; u <= kind.n; ++u) {
      for (NodeId v = u + 1; v <= kind.n; ++v) g.add_edge(offset + u, offset + v);
    }
  }
  return g;
}

LabeledGraph build(const CycleGraph& kind, const GadgetSpec&) {
  if (kind.n < 3) throw InvalidSpec("cycle needs n >= 3");
  LabeledGraph g(kind.n);
  for (NodeId v = 1; v < kind.n; ++v) g.add_edge(v, v + 1);
  g.add_edge(1, kind.n);
  return g;
}

LabeledGraph build(const PathGraph& kind, const GadgetSpec&) {
  if (kind.n < 1) throw InvalidSpec("path needs n >= 1");
  LabeledGraph g(kind.n);
  for (NodeId v = 1; v < kind.n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

NodeId BfsGadgetLayout::b(int j) const {
  if (j == skipped || j < 1 || j > base_order) throw InvalidSpec("no b_j for this j");
  const int pos = j < skipped ? j : j - 1;
  return 2 * base_order + 1 + pos;
}

NodeId BfsGadgetLayout::c(int j) const {
  if (j == skipped || j < 1 || j > base_order) throw InvalidSpec("no c_j for this j");
  const int pos = j < skipped ? j : j - 1;
  return 3 * base_order + pos;
}

LabeledGraph generate(const GadgetSpec& spec) {
  return std::visit([&](const auto& kind) { return build(kind, spec); }, spec.kind);
}

}  // namespace whiteboard
