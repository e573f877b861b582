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


#include "whiteboard/json_io.hpp"

#include <ostream>

namespace whiteboard {

Json to_json(const Field& field) {
  switch (field.kind) {
    case Field::Kind::kId: return Json{{"id", field.value}};
    case Field::Kind::kCount: return Json{{"count", field.value}};
    case Field::Kind::kFlag: return Json{{"flag", to_string(field.flag())}};
  }
  return Json();
}

Json to_json(const Payload& payload) {
  Json out = Json::array();
  for (const Field& f : payload) out.push_back(to_json(f));
  return out;
}

Json to_json(const Message& message) {
  Json out;
  out["author"] = message.author;
  out["created_at"] = message.created_at;
  out["payload"] = to_json(message.payload);
  return out;
}

Json to_json(const Output& output) {
  Json out;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, BooleanOutput>) {
          out["boolean"] = o.value;
        } else if constexpr (std::is_same_v<T, VertexSet>) {
          out["vertex_set"] = o.ids;
        } else if constexpr (std::is_same_v<T, ParentMap>) {
          Json map;
          map["root"] = o.root;
          Json parents = Json::array();
          for (const auto& [child, parent] : o.parent) parents.push_back({child, parent});
          map["parents"] = parents;
          if (!o.layer.empty()) {
            Json layers = Json::array();
            for (const auto& [v, layer] : o.layer) layers.push_back({v, layer});
            map["layers"] = layers;
          }
          out["parent_map"] = map;
        } else if constexpr (std::is_same_v<T, CountOutput>) {
          out["count"] = o.value;
        } else if constexpr (std::is_same_v<T, NotConnected>) {
          out["not_connected"] = true;
        } else {
          Json rows = Json::array();
          for (const auto& row : o.rows) {
            std::string bits;
            for (bool b : row) bits.push_back(b ? '1' : '0');
            rows.push_back(bits);
          }
          out["adjacency_matrix"] = rows;
        }
      },
      output);
  return out;
}

Json to_json(const StepRecord& record) {
  Json out;
  out["step"] = record.step;
  out["newly_active"] = record.newly_active;
  out["chosen"] = record.chosen;
  out["message"] = to_json(record.message);
  out["board_len"] = record.board_len;
  return out;
}

namespace {

Json schedule_json(const std::vector<NodeId>& schedule) { return Json(schedule); }

}  // namespace

Json to_json(const SweepReport& report) {
  Json out;
  out["schedules_explored"] = report.schedules_explored;
  out["completed_runs"] = report.completed_runs;
  out["distinct_states"] = report.distinct_states;
  out["memo_hits"] = report.memo_hits;
  out["exhaustive"] = report.exhaustive;
  if (!report.limit.empty()) out["limit"] = report.limit;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item;
    item["schedule"] = schedule_json(f.schedule);
    item["output"] = f.output ? to_json(*f.output) : Json();
    item["verdict"] = f.verdict;
    failures.push_back(item);
  }
  out["failures"] = failures;
  Json deadlocks = Json::array();
  for (const auto& d : report.deadlocks) {
    Json item;
    item["schedule"] = schedule_json(d.schedule);
    item["step"] = d.step;
    deadlocks.push_back(item);
  }
  out["deadlocks"] = deadlocks;
  Json budget = Json::array();
  for (const auto& b : report.budget_violations) {
    Json item;
    item["schedule"] = schedule_json(b.schedule);
    item["node"] = b.node;
    item["bits"] = b.bits;
    item["budget"] = b.budget;
    budget.push_back(item);
  }
  out["budget_violations"] = budget;
  Json outcomes = Json::array();
  for (const auto& o : report.outcomes) outcomes.push_back(to_json(o));
  out["outcomes"] = outcomes;
  return out;
}

Json to_json(const verify::AuditReport& report) {
  Json out;
  out["family"] = verify::to_string(report.family);
  out["n"] = report.parameter;
  out["node_count"] = report.node_count;
  out["family_size"] = report.family_size.str();
  out["bits_needed"] = report.bits_needed;
  out["board_capacity"] = report.board_capacity;
  out["feasible"] = report.feasible;
  return out;
}

void write_trace(std::ostream& os, const RunResult& result) {
  for (const StepRecord& record : result.trace) os << to_json(record).dump() << "\n";
  Json last;
  last["output"] = to_json(result.output);
  Json stats;
  stats["steps"] = result.stats.steps;
  stats["max_payload_bits"] = result.stats.max_payload_bits;
  last["stats"] = stats;
  os << last.dump() << "\n";
}

void write_trace(std::ostream& os, const DeadlockError& deadlock) {
  for (const StepRecord& record : deadlock.trace()) os << to_json(record).dump() << "\n";
  Json info;
  info["step"] = deadlock.step();
  info["board_len"] = deadlock.board().size();
  Json last;
  last["deadlock"] = info;
  os << last.dump() << "\n";
}

}  // namespace whiteboard
