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


#include "whiteboard/engine.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "whiteboard/adversary.hpp"

namespace whiteboard {

std::string to_string(Model m) {
  switch (m) {
    case Model::kSimAsync: return "simasync";
    case Model::kSimSync: return "simsync";
    case Model::kFreeAsync: return "freeasync";
    case Model::kFreeSync: return "freesync";
  }
  return "?";
}

std::optional<Model> model_from_string(std::string_view name) {
  for (auto m : {Model::kSimAsync, Model::kSimSync, Model::kFreeAsync, Model::kFreeSync}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool LocalView::is_neighbor(NodeId v) const {
  return std::binary_search(neighbor_ids.begin(), neighbor_ids.end(), v);
}

namespace {

constexpr std::string_view kFlagNames[kFlagVariants] = {
    "no", "yes", "empty", "root", "unreachable", "zero", "one"};

}  // namespace

std::string to_string(Flag flag) {
  return std::string(kFlagNames[static_cast<int>(flag)]);
}

std::optional<Flag> flag_from_string(std::string_view name) {
  for (int i = 0; i < kFlagVariants; ++i) {
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  }
  return std::nullopt;
}

int id_bits(int n) { return n <= 0 ? 0 : std::bit_width(static_cast<unsigned>(n)); }

int field_bits(Field::Kind kind, int n) {
  return kind == Field::Kind::kFlag ? kFlagBits : id_bits(n);
}

int encode_bits(const Payload& payload, int n) {
  int bits = 0;
  for (const Field& f : payload) bits += field_bits(f.kind, n);
  return bits;
}

void validate_payload(const Payload& payload, int n) {
  for (const Field& f : payload) {
    const int hi = f.kind == Field::Kind::kFlag ? kFlagVariants - 1 : n;
    if (f.value < 0 || f.value > hi) {
      throw InvalidPayload("field value " + std::to_string(f.value) + " outside 0.." +
                           std::to_string(hi));
    }
  }
}

const Message* BoardView::find(NodeId author) const {
  for (const Message& m : messages_) {
    if (m.author == author) return &m;
  }
  return nullptr;
}

std::string describe(const Output& out) {
  std::ostringstream os;
  auto join = [&os](const auto& range, auto&& item) {
    os << "{";
    bool first = true;
    for (const auto& e : range) {
      if (!first) os << ",";
      first = false;
      item(e);
    }
    os << "}";
  };
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, BooleanOutput>) {
          os << (o.value ? "true" : "false");
        } else if constexpr (std::is_same_v<T, VertexSet>) {
          join(o.ids, [&](NodeId v) { os << v; });
        } else if constexpr (std::is_same_v<T, ParentMap>) {
          join(o.parent, [&](const auto& kv) { os << kv.first << "->" << kv.second; });
          if (!o.layer.empty()) {
            os << " layers=";
            join(o.layer, [&](const auto& kv) { os << kv.first << ":" << kv.second; });
          }
        } else if constexpr (std::is_same_v<T, CountOutput>) {
          os << o.value;
        } else if constexpr (std::is_same_v<T, NotConnected>) {
          os << "not-connected";
        } else {
          for (std::size_t i = 0; i < o.rows.size(); ++i) {
            if (i) os << "/";
            for (bool b : o.rows[i]) os << (b ? '1' : '0');
          }
        }
      },
      out);
  return os.str();
}

// ---------------------------------------------------------------------------

std::size_t hash_value(const ExecutionState& state) {
  std::size_t h = std::hash<int>{}(state.step);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (NodeStatus s : state.status) mix(static_cast<std::size_t>(s));
  for (const auto& p : state.pending) {
    mix(p ? static_cast<std::size_t>(p->created_at) + 1 : 0);
    if (p) {
      for (const Field& f : p->payload) mix((static_cast<std::size_t>(f.kind) << 32) ^ f.value);
    }
  }
  for (int a : state.activated_at) mix(static_cast<std::size_t>(a + 1));
  for (const Message& m : state.board) {
    mix(static_cast<std::size_t>(m.author));
    mix(static_cast<std::size_t>(m.created_at));
    for (const Field& f : m.payload) mix((static_cast<std::size_t>(f.kind) << 32) ^ f.value);
  }
  return h;
}

DeadlockError::DeadlockError(int step, std::vector<StepRecord> trace, Whiteboard board)
    : Error("deadlock at step " + std::to_string(step) + ": no active node with " +
            std::to_string(board.size()) + " messages written"),
      step_(step),
      trace_(std::move(trace)),
      board_(std::move(board)) {}

BudgetError::BudgetError(NodeId node, int bits, int budget)
    : Error("node " + std::to_string(node) + " composed " + std::to_string(bits) +
            " payload bits, budget is " + std::to_string(budget)),
      node_(node),
      bits_(bits),
      budget_(budget) {}

// ---------------------------------------------------------------------------

Simulator::Simulator(const LabeledGraph& g, Protocol p, Model m, BudgetConfig budget)
    : protocol_(std::move(p)), model_(m), budget_(budget) {
  if (protocol_.target_model != m) {
    throw InvalidLift("protocol '" + protocol_.name + "' targets " +
                      to_string(protocol_.target_model) + ", not " + to_string(m));
  }
  if (!protocol_.compose || !protocol_.decide) {
    throw InvalidSpec("protocol '" + protocol_.name + "' lacks compose or decide");
  }
  if (!is_simultaneous(m) && !protocol_.activation) {
    throw InvalidSpec("protocol '" + protocol_.name + "' lacks an activation function");
  }
  views_.reserve(static_cast<std::size_t>(g.order()));
  for (NodeId v = 1; v <= g.order(); ++v) {
    views_.push_back(LocalView{v, g.neighbors(v), g.order()});
  }
}

ExecutionState Simulator::initial_state() const {
  const auto n = static_cast<std::size_t>(order());
  ExecutionState s;
  s.status.assign(n, NodeStatus::kAwake);
  s.pending.assign(n, std::nullopt);
  s.activated_at.assign(n, -1);
  return s;
}

Payload Simulator::compose_checked(NodeId v, BoardView board) const {
  Payload payload = protocol_.compose(view(v), board);
  validate_payload(payload, order());
  const int bits = encode_bits(payload, order());
  if (bits > payload_budget()) throw BudgetError(v, bits, payload_budget());
  return payload;
}

std::vector<NodeId> Simulator::activate(ExecutionState& state) const {
  const BoardView snapshot = state.board.view();
  const int board_len = static_cast<int>(snapshot.size());
  std::vector<NodeId> newly;
  for (NodeId v = 1; v <= order(); ++v) {
    if (state.status_of(v) != NodeStatus::kAwake) continue;
    const bool wakes = is_simultaneous(model_) ? state.step == 1
                                               : protocol_.activation(view(v), snapshot);
    if (wakes) newly.push_back(v);
  }
  // Every decision above saw the same snapshot; only now mutate.
  for (NodeId v : newly) {
    state.status[v - 1] = NodeStatus::kActive;
    state.activated_at[v - 1] = board_len;
    if (composes_at_activation(model_)) {
      state.pending[v - 1] = PendingMessage{board_len, compose_checked(v, snapshot)};
    }
  }
  return newly;
}

std::vector<NodeId> Simulator::active_nodes(const ExecutionState& state) const {
  std::vector<NodeId> out;
  for (NodeId v = 1; v <= order(); ++v) {
    if (state.status_of(v) == NodeStatus::kActive) out.push_back(v);
  }
  return out;
}

const Message& Simulator::write(ExecutionState& state, NodeId v) const {
  if (v < 1 || v > order() || state.status_of(v) != NodeStatus::kActive) {
    throw SchedulerError("node " + std::to_string(v) + " is not active at step " +
                         std::to_string(state.step));
  }
  Message m{v, static_cast<int>(state.board.size()), {}};
  if (composes_at_activation(model_)) {
    PendingMessage& pending = *state.pending[v - 1];
    m.created_at = pending.created_at;
    m.payload = std::move(pending.payload);
    state.pending[v - 1].reset();
  } else {
    const BoardView board =
        protocol_.compose_from_activation_snapshot
            ? state.board.view().prefix(static_cast<std::size_t>(state.activated_at[v - 1]))
            : state.board.view();
    m.payload = compose_checked(v, board);
  }
  state.board.append(std::move(m));
  state.status[v - 1] = NodeStatus::kTerminated;
  ++state.step;
  return state.board[state.board.size() - 1];
}

Output Simulator::decide(const ExecutionState& state) const {
  return protocol_.decide(state.board.view(), order());
}

// ---------------------------------------------------------------------------

RunResult run(const LabeledGraph& g, const Protocol& p, Model m, const Scheduler& sched,
              BudgetConfig budget) {
  const Simulator sim(g, p, m, budget);
  sched.check_order(sim.order());
  ExecutionState state = sim.initial_state();
  RunResult result;
  while (!sim.finished(state)) {
    const int step = state.step;
    std::vector<NodeId> newly = sim.activate(state);
    const std::vector<NodeId> active = sim.active_nodes(state);
    if (active.empty()) throw DeadlockError(step, std::move(result.trace), state.board);
    const NodeId chosen = sched.choose(active, state.board.view(), step);
    const Message& written = sim.write(state, chosen);
    result.stats.max_payload_bits =
        std::max(result.stats.max_payload_bits, encode_bits(written.payload, sim.order()));
    result.trace.push_back(StepRecord{step, std::move(newly), chosen, written,
                                      static_cast<int>(state.board.size())});
  }
  result.stats.steps = static_cast<int>(result.trace.size());
  result.output = sim.decide(state);
  result.board = std::move(state.board);
  return result;
}

std::optional<std::string> timing_law_violation(const Simulator& sim, const Whiteboard& board) {
  for (std::size_t pos = 0; pos < board.size(); ++pos) {
    const Message& m = board[pos];
    const std::string where = "message " + std::to_string(pos) + " by node " +
                              std::to_string(m.author);
    if (composes_at_activation(sim.model())) {
      if (m.created_at < 0 || static_cast<std::size_t>(m.created_at) > pos) {
        return where + ": created_at " + std::to_string(m.created_at) +
               " after its write position";
      }
      const Payload replay = sim.protocol().compose(
          sim.view(m.author), board.view().prefix(static_cast<std::size_t>(m.created_at)));
      if (replay != m.payload) return where + ": payload differs from replayed compose";
    } else if (static_cast<std::size_t>(m.created_at) != pos) {
      return where + ": created_at " + std::to_string(m.created_at) +
             " differs from write position";
    }
  }
  return std::nullopt;
}

}  // namespace whiteboard
