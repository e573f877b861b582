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


#ifndef WHITEBOARD_ENGINE_HPP_
#define WHITEBOARD_ENGINE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "whiteboard/errors.hpp"
#include "whiteboard/graph.hpp"

namespace whiteboard {

// ---------------------------------------------------------------------------
// Models

// Ordered by computing power: each model can run every protocol of the
// models before it (see lift()).
enum class Model : std::uint8_t { kSimAsync, kSimSync, kFreeAsync, kFreeSync };

// All nodes forced active at step 1.
constexpr bool is_simultaneous(Model m) {
  return m == Model::kSimAsync || m == Model::kSimSync;
}
// Message composed in the step the node becomes active (else when chosen).
constexpr bool composes_at_activation(Model m) {
  return m == Model::kSimAsync || m == Model::kFreeAsync;
}

std::string to_string(Model m);
std::optional<Model> model_from_string(std::string_view name);

// The only graph information a node may read.
struct LocalView {
  NodeId self_id = 0;
  std::vector<NodeId> neighbor_ids;  // ascending
  int n = 0;

  bool is_neighbor(NodeId v) const;
  int degree() const { return static_cast<int>(neighbor_ids.size()); }
};

// ---------------------------------------------------------------------------
// Payloads

enum class Flag : std::uint8_t { kNo, kYes, kEmpty, kRoot, kUnreachable, kZero, kOne };

std::string to_string(Flag flag);
std::optional<Flag> flag_from_string(std::string_view name);

struct Field {
  enum class Kind : std::uint8_t { kId, kCount, kFlag };

  Kind kind = Kind::kId;
  int value = 0;

  static Field Id(NodeId v) { return {Kind::kId, v}; }
  static Field Count(int k) { return {Kind::kCount, k}; }
  static Field Of(Flag f) { return {Kind::kFlag, static_cast<int>(f)}; }

  bool is_id() const { return kind == Kind::kId; }
  bool is_count() const { return kind == Kind::kCount; }
  bool is_flag(Flag f) const { return kind == Kind::kFlag && value == static_cast<int>(f); }
  Flag flag() const { return static_cast<Flag>(value); }

  auto operator<=>(const Field&) const = default;
};

using Payload = std::vector<Field>;

inline constexpr int kFlagBits = 3;
inline constexpr int kFlagVariants = 7;

// ceil(log2(n + 1)): bits for one identifier or count in 0..n.
int id_bits(int n);
int field_bits(Field::Kind kind, int n);
int encode_bits(const Payload& payload, int n);

// Throws InvalidPayload if a field value is outside its encodable range.
void validate_payload(const Payload& payload, int n);

struct BudgetConfig {
  int c_msg = 8;
  // B(n) = c_msg * ceil(log2(n + 1)) payload bits; the author/created_at
  // header is not charged.
  int payload_budget(int n) const { return c_msg * id_bits(n); }
};

// ---------------------------------------------------------------------------
// Whiteboard

struct Message {
  NodeId author = 0;
  int created_at = 0;  // board length when the message was composed
  Payload payload;

  bool operator==(const Message&) const = default;
};

// Read-only view over a board or one of its prefixes.
class BoardView {
 public:
  BoardView() = default;
  explicit BoardView(std::span<const Message> messages) : messages_(messages) {}

  std::size_t size() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }
  const Message& operator[](std::size_t i) const { return messages_[i]; }
  auto begin() const { return messages_.begin(); }
  auto end() const { return messages_.end(); }

  BoardView prefix(std::size_t length) const {
    return BoardView(messages_.first(std::min(length, messages_.size())));
  }

  // Message written by `author`, or nullptr.
  const Message* find(NodeId author) const;
  bool has_author(NodeId author) const { return find(author) != nullptr; }

 private:
  std::span<const Message> messages_;
};

class Whiteboard {
 public:
  void append(Message m) { messages_.push_back(std::move(m)); }

  std::size_t size() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }
  const Message& operator[](std::size_t i) const { return messages_[i]; }
  auto begin() const { return messages_.begin(); }
  auto end() const { return messages_.end(); }
  const std::vector<Message>& messages() const { return messages_; }

  BoardView view() const { return BoardView(messages_); }
  operator BoardView() const { return view(); }  // NOLINT(google-explicit-constructor)

  bool operator==(const Whiteboard&) const = default;

 private:
  std::vector<Message> messages_;
};

// ---------------------------------------------------------------------------
// Outputs

struct BooleanOutput {
  bool value = false;
  bool operator==(const BooleanOutput&) const = default;
};
struct VertexSet {
  std::set<NodeId> ids;
  bool operator==(const VertexSet&) const = default;
};
// child -> parent pairs; `layer` is filled only by BFS protocols.
struct ParentMap {
  NodeId root = 0;
  std::map<NodeId, NodeId> parent;
  std::map<NodeId, int> layer;
  bool operator==(const ParentMap&) const = default;
};
struct CountOutput {
  long long value = 0;
  bool operator==(const CountOutput&) const = default;
};
struct NotConnected {
  bool operator==(const NotConnected&) const = default;
};
struct AdjacencyMatrix {
  std::vector<std::vector<bool>> rows;
  bool operator==(const AdjacencyMatrix&) const = default;
};

using Output =
    std::variant<BooleanOutput, VertexSet, ParentMap, CountOutput, NotConnected, AdjacencyMatrix>;

// Result of checking an output against ground truth.
struct Verdict {
  bool correct = true;
  std::string reason;  // empty when correct

  static Verdict Correct() { return {}; }
  static Verdict Incorrect(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return correct; }
};

// Short human-readable rendering: `true`, `{1,3}`, `{2->1,3->2}`, `3`, ...
std::string describe(const Output& out);

// ---------------------------------------------------------------------------
// Protocols

using ActivationFn = std::function<bool(const LocalView&, BoardView)>;
using ComposeFn = std::function<Payload(const LocalView&, BoardView)>;
using DecideFn = std::function<Output(BoardView, int n)>;

/**
 * A whiteboard protocol: activation, message composition and decision.
 *
 * All three behaviors must be deterministic. `activation` is ignored in the
 * simultaneous models. `decide` sees only the final board and n, so every
 * node computes the same output.
 */
struct Protocol {
  std::string name;
  Model target_model = Model::kSimAsync;
  ActivationFn activation;
  ComposeFn compose;
  DecideFn decide;

  // False when all three behaviors depend only on the set of
  // (author, payload) pairs on the board, not on write order or created_at.
  // Sweeps use it to merge states reached through different orders.
  bool reads_board_order = true;

  // Sync models only: compose sees the board prefix recorded when the node
  // became active instead of the current board.
  bool compose_from_activation_snapshot = false;
};

// Adapts `p` to the model one step above its target
// (SimAsync -> SimSync -> FreeAsync -> FreeSync); decide is unchanged.
// Throws InvalidLift for any other target.
Protocol lift(const Protocol& p, Model target);

// Applies lift() repeatedly; returns `p` itself when already at `target`.
Protocol lift_to(const Protocol& p, Model target);

// ---------------------------------------------------------------------------
// Execution

enum class NodeStatus : std::uint8_t { kAwake, kActive, kTerminated };

struct PendingMessage {
  int created_at = 0;
  Payload payload;
  bool operator==(const PendingMessage&) const = default;
};

// Value type; copy it to branch.
struct ExecutionState {
  int step = 1;
  std::vector<NodeStatus> status;                     // index v - 1
  std::vector<std::optional<PendingMessage>> pending;  // async models only
  std::vector<int> activated_at;                      // board length, -1 if never
  Whiteboard board;

  NodeStatus status_of(NodeId v) const { return status[v - 1]; }
  bool operator==(const ExecutionState&) const = default;
};

std::size_t hash_value(const ExecutionState& state);

struct StepRecord {
  int step = 0;
  std::vector<NodeId> newly_active;  // ascending
  NodeId chosen = 0;
  Message message;
  int board_len = 0;
  bool operator==(const StepRecord&) const = default;
};

struct RunStats {
  int steps = 0;
  int max_payload_bits = 0;
};

struct RunResult {
  std::vector<StepRecord> trace;
  Whiteboard board;
  Output output;
  RunStats stats;
};

// No node active while some are not terminated.
class DeadlockError : public Error {
 public:
  DeadlockError(int step, std::vector<StepRecord> trace, Whiteboard board);
  int step() const { return step_; }
  const std::vector<StepRecord>& trace() const { return trace_; }
  const Whiteboard& board() const { return board_; }

 private:
  int step_;
  std::vector<StepRecord> trace_;
  Whiteboard board_;
};

// A composed payload exceeds B(n).
class BudgetError : public Error {
 public:
  BudgetError(NodeId node, int bits, int budget);
  NodeId node() const { return node_; }
  int bits() const { return bits_; }
  int budget() const { return budget_; }

 private:
  NodeId node_;
  int bits_;
  int budget_;
};

class Scheduler;

/**
 * Step-level semantics of one model, shared by run() and the sweep.
 *
 * Each step is: activate() -> active_nodes() (empty means deadlock) ->
 * write(chosen). The protocol never sees the graph, only the LocalView built
 * here for each node.
 */
class Simulator {
 public:
  // Throws InvalidLift unless m == p.target_model.
  Simulator(const LabeledGraph& g, Protocol p, Model m, BudgetConfig budget = {});

  int order() const { return static_cast<int>(views_.size()); }
  Model model() const { return model_; }
  const Protocol& protocol() const { return protocol_; }
  const LocalView& view(NodeId v) const { return views_[v - 1]; }
  int payload_budget() const { return budget_.payload_budget(order()); }

  ExecutionState initial_state() const;

  // Activation phase of state.step: every awake node evaluates activation on
  // the start-of-step board (all nodes at step 1 in simultaneous models).
  // Async models compose here. Returns newly active ids, ascending.
  // Throws BudgetError / InvalidPayload.
  std::vector<NodeId> activate(ExecutionState& state) const;

  std::vector<NodeId> active_nodes(const ExecutionState& state) const;

  // Writes v's message and terminates v. Sync models compose here.
  // Throws SchedulerError if v is not active.
  const Message& write(ExecutionState& state, NodeId v) const;

  bool finished(const ExecutionState& state) const {
    return static_cast<int>(state.board.size()) == order();
  }

  Output decide(const ExecutionState& state) const;

 private:
  Payload compose_checked(NodeId v, BoardView board) const;

  std::vector<LocalView> views_;
  Protocol protocol_;
  Model model_;
  BudgetConfig budget_;
};

// Runs one schedule to completion. Throws DeadlockError, BudgetError.
RunResult run(const LabeledGraph& g, const Protocol& p, Model m, const Scheduler& sched,
              BudgetConfig budget = {});

// Checks the async replay law (payload == compose on the created_at prefix)
// or the sync law (created_at == write position) on a final board. Returns a
// description of the first violation.
std::optional<std::string> timing_law_violation(const Simulator& sim, const Whiteboard& board);

}  // namespace whiteboard

template <>
struct std::hash<whiteboard::ExecutionState> {
  std::size_t operator()(const whiteboard::ExecutionState& s) const {
    return whiteboard::hash_value(s);
  }
};

#endif  // WHITEBOARD_ENGINE_HPP_
