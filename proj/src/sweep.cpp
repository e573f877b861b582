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


#include <algorithm>
#include <future>
#include <unordered_set>

#include "whiteboard/adversary.hpp"

namespace whiteboard {

namespace {

void append_int(std::string& key, int v) {
  key.append(reinterpret_cast<const char*>(&v), sizeof v);
}

void append_payload(std::string& key, const Payload& payload) {
  append_int(key, static_cast<int>(payload.size()));
  for (const Field& f : payload) {
    key.push_back(static_cast<char>(f.kind));
    append_int(key, f.value);
  }
}

void add_outcome(std::vector<Output>& outcomes, const Output& out) {
  if (std::find(outcomes.begin(), outcomes.end(), out) == outcomes.end()) {
    outcomes.push_back(out);
  }
}

class Explorer {
 public:
  Explorer(const Simulator& sim, const OutputCheck& check, const SweepOptions& options,
           std::chrono::steady_clock::time_point deadline)
      : sim_(sim), check_(check), options_(options), deadline_(deadline) {}

  void explore(ExecutionState state) {
    if (!within_limits()) return;
    if (options_.memoize) {
      if (!seen_.insert(memo_key(state, sim_.protocol().reads_board_order)).second) {
        ++report_.memo_hits;
        return;
      }
    }
    ++report_.distinct_states;

    if (sim_.finished(state)) {
      finish_leaf(state);
      return;
    }
    std::vector<NodeId> active;
    if (!activate(state, active)) return;
    for (NodeId v : active) {
      ExecutionState child = state;
      schedule_.push_back(v);
      if (write(child, v)) explore(std::move(child));
      schedule_.pop_back();
    }
  }

  // Sync models compose here, so the write itself can break the budget.
  bool write(ExecutionState& state, NodeId v) {
    try {
      sim_.write(state, v);
      return true;
    } catch (const BudgetError& e) {
      ++report_.schedules_explored;
      report_.budget_violations.push_back({schedule_, e.node(), e.bits(), e.budget()});
    } catch (const InvalidPayload& e) {
      ++report_.schedules_explored;
      report_.failures.push_back({schedule_, std::nullopt, e.what()});
    }
    return false;
  }

  // Activation phase plus dead-end bookkeeping. False when the branch ends.
  bool activate(ExecutionState& state, std::vector<NodeId>& active) {
    try {
      sim_.activate(state);
    } catch (const BudgetError& e) {
      ++report_.schedules_explored;
      report_.budget_violations.push_back({schedule_, e.node(), e.bits(), e.budget()});
      return false;
    } catch (const InvalidPayload& e) {
      ++report_.schedules_explored;
      report_.failures.push_back({schedule_, std::nullopt, e.what()});
      return false;
    }
    active = sim_.active_nodes(state);
    if (active.empty()) {
      ++report_.schedules_explored;
      report_.deadlocks.push_back({schedule_, state.step});
      return false;
    }
    return true;
  }

  void set_schedule(std::vector<NodeId> prefix) { schedule_ = std::move(prefix); }
  SweepReport& report() { return report_; }

 private:
  bool within_limits() {
    if (!report_.exhaustive) return false;
    if (report_.distinct_states >= options_.limits.max_states) {
      report_.exhaustive = false;
      report_.limit = "max_states";
      return false;
    }
    if ((++ticks_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      report_.exhaustive = false;
      report_.limit = "max_time";
      return false;
    }
    return true;
  }

  void finish_leaf(const ExecutionState& state) {
    ++report_.schedules_explored;
    ++report_.completed_runs;
    try {
      const Output out = sim_.decide(state);
      add_outcome(report_.outcomes, out);
      const Verdict verdict = check_(out);
      if (!verdict) report_.failures.push_back({schedule_, out, verdict.reason});
      if (options_.on_leaf) options_.on_leaf(sim_, state, out, schedule_);
    } catch (const Error& e) {
      report_.failures.push_back({schedule_, std::nullopt, e.what()});
    }
  }

  const Simulator& sim_;
  const OutputCheck& check_;
  const SweepOptions& options_;
  std::chrono::steady_clock::time_point deadline_;
  std::unordered_set<std::string> seen_;
  std::vector<NodeId> schedule_;
  SweepReport report_;
  std::size_t ticks_ = 0;
};

}  // namespace

std::string memo_key(const ExecutionState& state, bool reads_board_order) {
  std::string key;
  for (NodeStatus s : state.status) key.push_back(static_cast<char>(s));
  for (std::size_t i = 0; i < state.pending.size(); ++i) {
    const auto& pending = state.pending[i];
    key.push_back(pending ? 'p' : '-');
    if (!pending) continue;
    if (reads_board_order) append_int(key, pending->created_at);
    append_payload(key, pending->payload);
  }
  if (reads_board_order) {
    for (int a : state.activated_at) append_int(key, a);
    for (const Message& m : state.board) {
      append_int(key, m.author);
      append_int(key, m.created_at);
      append_payload(key, m.payload);
    }
  } else {
    std::vector<const Message*> sorted;
    for (const Message& m : state.board) sorted.push_back(&m);
    std::sort(sorted.begin(), sorted.end(),
              [](const Message* a, const Message* b) { return a->author < b->author; });
    for (const Message* m : sorted) {
      append_int(key, m->author);
      append_payload(key, m->payload);
    }
  }
  return key;
}

void SweepReport::merge(const SweepReport& other) {
  schedules_explored += other.schedules_explored;
  completed_runs += other.completed_runs;
  distinct_states += other.distinct_states;
  memo_hits += other.memo_hits;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  deadlocks.insert(deadlocks.end(), other.deadlocks.begin(), other.deadlocks.end());
  budget_violations.insert(budget_violations.end(), other.budget_violations.begin(),
                           other.budget_violations.end());
  for (const Output& out : other.outcomes) add_outcome(outcomes, out);
  if (!other.exhaustive) {
    exhaustive = false;
    if (limit.empty()) limit = other.limit;
  }
}

SweepReport sweep(const LabeledGraph& g, const Protocol& p, Model m, const OutputCheck& check,
                  const SweepOptions& options) {
  const Simulator sim(g, p, m, options.budget);
  const auto deadline = std::chrono::steady_clock::now() + options.limits.max_time;
  const OutputCheck accept_all = [](const Output&) { return Verdict::Correct(); };
  const OutputCheck& checker = check ? check : accept_all;

  if (options.jobs <= 1) {
    Explorer explorer(sim, checker, options, deadline);
    explorer.explore(sim.initial_state());
    return std::move(explorer.report());
  }

  // Fan the first choice out over workers; each keeps its own memo table.
  Explorer root(sim, checker, options, deadline);
  ExecutionState state = sim.initial_state();
  ++root.report().distinct_states;
  std::vector<NodeId> active;
  if (sim.finished(state) || !root.activate(state, active)) {
    if (sim.finished(state)) {
      SweepOptions single = options;
      single.jobs = 1;
      return sweep(g, p, m, check, single);
    }
    return std::move(root.report());
  }
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.jobs), active.size());
  std::vector<std::future<SweepReport>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      Explorer explorer(sim, checker, options, deadline);
      for (std::size_t k = w; k < active.size(); k += workers) {
        ExecutionState child = state;
        explorer.set_schedule({active[k]});
        if (explorer.write(child, active[k])) explorer.explore(std::move(child));
      }
      return std::move(explorer.report());
    }));
  }
  SweepReport report = std::move(root.report());
  for (auto& f : futures) report.merge(f.get());
  return report;
}

}  // namespace whiteboard
