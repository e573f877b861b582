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

namespace whiteboard::verify {

std::string to_string(Family family) {
  switch (family) {
    case Family::kAllGraphs: return "all";
    case Family::kSquareFree: return "square-free";
    case Family::kClassC: return "class-c";
    case Family::kTwoCliquesClass: return "two-cliques";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (auto f : {Family::kAllGraphs, Family::kSquareFree, Family::kClassC,
                 Family::kTwoCliquesClass}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

int ceil_log2(const BigCount& g) {
  if (g <= 1) return 0;
  const BigCount below = g - 1;
  return static_cast<int>(boost::multiprecision::msb(below)) + 1;
}

namespace {

bool regular_of_degree(const LabeledGraph& g, int d) {
  for (NodeId v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

AuditReport lemma1_audit(Family family, int n, BudgetConfig budget, int cap) {
  if (n < 1) throw InvalidSpec("audit needs n >= 1");
  AuditReport report;
  report.family = family;
  report.parameter = n;
  report.node_count = n;
  BigCount count = 0;
  switch (family) {
    case Family::kAllGraphs:
      for_each_graph(n, [&](const LabeledGraph&) { ++count; }, cap);
      break;
    case Family::kSquareFree:
      for_each_graph(n, [&](const LabeledGraph& g) { count += has_square(g) ? 0 : 1; }, cap);
      break;
    case Family::kClassC:
      report.node_count = 2 * n;
      for_each_graph(
          n,
          [&](const LabeledGraph& h) {
            if (has_square(h)) return;
            for (NodeId i = 1; i <= n; ++i) {
              for (NodeId j = i + 1; j <= n; ++j) {
                generate(GadgetSpec{ClassC{i, j}, h});
                ++count;
              }
            }
          },
          cap);
      break;
    case Family::kTwoCliquesClass:
      report.node_count = 2 * n;
      for_each_graph(
          2 * n, [&](const LabeledGraph& g) { count += regular_of_degree(g, n - 1) ? 1 : 0; },
          cap);
      break;
  }
  report.family_size = count;
  report.bits_needed = ceil_log2(count);
  const int nodes = report.node_count;
  report.board_capacity =
      static_cast<long long>(nodes) * (budget.payload_budget(nodes) + 2 * id_bits(nodes));
  report.feasible = report.bits_needed <= report.board_capacity;
  return report;
}

}  // namespace whiteboard::verify
