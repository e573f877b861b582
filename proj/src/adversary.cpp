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


#include "whiteboard/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace whiteboard {

namespace {

void check_permutation(const std::vector<NodeId>& order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw InvalidOrder("fixed order lists " + std::to_string(order.size()) + " ids, need " +
                       std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (NodeId v : order) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidOrder("fixed order is not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

}  // namespace

NodeId Scheduler::choose(std::span<const NodeId> active, BoardView board, int step) const {
  if (active.empty()) throw SchedulerError("no active node to choose from");
  return std::visit(
      [&](const auto& k) -> NodeId {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedOrder>) {
          for (NodeId v : k.order) {
            if (std::find(active.begin(), active.end(), v) != active.end()) return v;
          }
          throw SchedulerError("fixed order lists no active node at step " +
                               std::to_string(step));
        } else if constexpr (std::is_same_v<T, MinId>) {
          return *std::min_element(active.begin(), active.end());
        } else if constexpr (std::is_same_v<T, MaxId>) {
          return *std::max_element(active.begin(), active.end());
        } else {
          std::vector<std::uint32_t> material{
              static_cast<std::uint32_t>(k.seed), static_cast<std::uint32_t>(k.seed >> 32),
              static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(board.size())};
          for (NodeId v : active) material.push_back(static_cast<std::uint32_t>(v));
          std::seed_seq seq(material.begin(), material.end());
          std::mt19937_64 rng(seq);
          std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
          return active[pick(rng)];
        }
      },
      kind_);
}

void Scheduler::check_order(int n) const {
  if (const auto* fixed = std::get_if<FixedOrder>(&kind_)) check_permutation(fixed->order, n);
}

Scheduler make_scheduler(SchedulerKind kind) {
  if (const auto* fixed = std::get_if<FixedOrder>(&kind)) {
    check_permutation(fixed->order, static_cast<int>(fixed->order.size()));
  }
  return Scheduler(std::move(kind));
}

Scheduler parse_scheduler(std::string_view text) {
  if (text == "min-id") return make_scheduler(MinId{});
  if (text == "max-id") return make_scheduler(MaxId{});
  auto parse_number = [](std::string_view token, auto& out) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw ParseError("bad number '" + std::string(token) + "' in scheduler");
    }
  };
  if (text.starts_with("random:")) {
    std::uint64_t seed = 0;
    parse_number(text.substr(7), seed);
    return make_scheduler(SeededRandom{seed});
  }
  if (text.starts_with("fixed:")) {
    std::string_view rest = text.substr(6);
    FixedOrder order;
    while (true) {
      const auto comma = rest.find(',');
      NodeId v = 0;
      parse_number(rest.substr(0, comma), v);
      order.order.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return make_scheduler(std::move(order));
  }
  throw ParseError("unknown scheduler '" + std::string(text) +
                   "' (fixed:ORDER, min-id, max-id, random:SEED)");
}

Scheduler witness_scheduler(std::span<const NodeId> witness, int n) {
  FixedOrder order{{witness.begin(), witness.end()}};
  for (NodeId v = 1; v <= n; ++v) {
    if (std::find(witness.begin(), witness.end(), v) == witness.end()) {
      order.order.push_back(v);
    }
  }
  return make_scheduler(std::move(order));
}

}  // namespace whiteboard
