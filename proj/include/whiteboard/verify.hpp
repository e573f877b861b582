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


#ifndef WHITEBOARD_VERIFY_HPP_
#define WHITEBOARD_VERIFY_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "whiteboard/engine.hpp"
#include "whiteboard/graph.hpp"

namespace whiteboard::verify {

using BigCount = boost::multiprecision::cpp_int;

/**
 * Checks `out` against the ground truth for `problem` on `g`.
 *
 * MIS: mis_valid. SpanningTree: n - 1 tree edges of g reaching r from every
 * node (NotConnected accepted iff g is disconnected). BFS: layers equal to
 * bfs_layers and each parent one layer closer (NotConnected iff g is
 * disconnected). Square / TwoCliques / Connectivity: boolean against the
 * oracle. NumEdges: edge count. Build: exact adjacency.
 *
 * Throws TagMismatch if the output kind does not fit the problem, and
 * propagates NotInInputClass for TwoCliques.
 */
Verdict check_output(const ProblemInstance& problem, const LabeledGraph& g, const Output& out);

// Adjacency matrix of g, as a BUILD answer.
AdjacencyMatrix adjacency_of(const LabeledGraph& g);

enum class Family { kAllGraphs, kSquareFree, kClassC, kTwoCliquesClass };

std::string to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct AuditReport {
  Family family = Family::kAllGraphs;
  int parameter = 0;       // the audited n
  int node_count = 0;      // order of the family's graphs (2n for ClassC, TwoCliques)
  BigCount family_size;    // g, counted by enumeration
  int bits_needed = 0;     // ceil(log2 g)
  long long board_capacity = 0;  // node_count * (B + header bits)
  bool feasible = false;
};

// ceil(log2 g), exactly; 0 for g <= 1.
int ceil_log2(const BigCount& g);

/**
 * Counts the family by exhaustive enumeration and compares the bits needed to
 * tell its members apart with what a whiteboard of node_count messages can
 * hold. The header (author, created_at) is charged 2 * ceil(log2(N + 1))
 * bits per message.
 *
 * ClassC(n) counts every square-free H on n nodes times every pair i < j.
 * TwoCliquesClass(n) counts the (n-1)-regular graphs on 2n nodes.
 * Throws CapExceeded when the enumeration would exceed `cap` nodes.
 */
AuditReport lemma1_audit(Family family, int n, BudgetConfig budget = {},
                         int cap = kDefaultEnumerationCap);

}  // namespace whiteboard::verify

#endif  // WHITEBOARD_VERIFY_HPP_
