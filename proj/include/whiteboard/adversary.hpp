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


#ifndef WHITEBOARD_ADVERSARY_HPP_
#define WHITEBOARD_ADVERSARY_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "whiteboard/engine.hpp"

namespace whiteboard {

// ---------------------------------------------------------------------------
// Single-run schedulers

// Earliest listed id that is currently active wins.
struct FixedOrder {
  std::vector<NodeId> order;
};
struct MinId {};
struct MaxId {};
// Uniform choice from a std::mt19937_64 seeded with (seed, step, board
// length, active ids), so a choice is a pure function of its arguments.
struct SeededRandom {
  std::uint64_t seed = 0;
};

using SchedulerKind = std::variant<FixedOrder, MinId, MaxId, SeededRandom>;

class Scheduler {
 public:
  // Returns an element of `active` (non-empty). Throws SchedulerError when
  // a fixed order lists none of the active ids.
  NodeId choose(std::span<const NodeId> active, BoardView board, int step) const;

  // Throws InvalidOrder if a fixed order is not a permutation of 1..n.
  void check_order(int n) const;

  const SchedulerKind& kind() const { return kind_; }

 private:
  explicit Scheduler(SchedulerKind kind) : kind_(std::move(kind)) {}
  friend Scheduler make_scheduler(SchedulerKind kind);

  SchedulerKind kind_;
};

// Throws InvalidOrder unless a FixedOrder list is a permutation of 1..len.
Scheduler make_scheduler(SchedulerKind kind);

// Parses `fixed:2,1,3`, `min-id`, `max-id`, `random:SEED`.
// Throws InvalidOrder / ParseError.
Scheduler parse_scheduler(std::string_view text);

// Fixed order that replays a witness prefix: the witness ids first, then the
// remaining ids ascending.
Scheduler witness_scheduler(std::span<const NodeId> witness, int n);

// ---------------------------------------------------------------------------
// Exhaustive exploration

struct SweepLimits {
  std::size_t max_states = 10'000'000;
  std::chrono::milliseconds max_time{60'000};
};

using OutputCheck = std::function<Verdict(const Output&)>;
using LeafHook = std::function<void(const Simulator&, const ExecutionState&, const Output&,
                                    std::span<const NodeId> schedule)>;

struct SweepOptions {
  SweepLimits limits;
  bool memoize = true;
  int jobs = 1;
  BudgetConfig budget;
  // Called on every completed leaf that is actually explored.
  LeafHook on_leaf;
};

struct SweepFailure {
  std::vector<NodeId> schedule;
  std::optional<Output> output;  // empty when decide itself threw
  std::string verdict;
};

struct SweepDeadlock {
  std::vector<NodeId> schedule;
  int step = 0;
};

struct SweepBudgetViolation {
  std::vector<NodeId> schedule;
  NodeId node = 0;
  int bits = 0;
  int budget = 0;
};

struct SweepReport {
  std::size_t schedules_explored = 0;  // leaves reached: completed + dead ends
  std::size_t completed_runs = 0;
  std::size_t distinct_states = 0;     // upper bound when jobs > 1
  std::size_t memo_hits = 0;
  std::vector<SweepFailure> failures;
  std::vector<SweepDeadlock> deadlocks;
  std::vector<SweepBudgetViolation> budget_violations;
  std::vector<Output> outcomes;  // distinct leaf outputs, discovery order
  bool exhaustive = true;
  std::string limit;  // which limit stopped the sweep, if any

  bool clean() const {
    return failures.empty() && deadlocks.empty() && budget_violations.empty();
  }
  // Associative merge of independently explored subtrees.
  void merge(const SweepReport& other);
};

/**
 * Depth-first walk of the adversary's decision tree: every active node is
 * tried at every step. With memoization, a state whose canonical key was
 * already seen is not expanded again; the key drops write order and
 * created_at when the protocol declares `reads_board_order = false`.
 *
 * Hitting a limit stops the walk and clears `exhaustive`.
 */
SweepReport sweep(const LabeledGraph& g, const Protocol& p, Model m, const OutputCheck& check,
                  const SweepOptions& options = {});

// Canonical memoization key of a start-of-step state.
std::string memo_key(const ExecutionState& state, bool reads_board_order);

}  // namespace whiteboard

#endif  // WHITEBOARD_ADVERSARY_HPP_
