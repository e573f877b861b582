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

namespace whiteboard {

namespace {

Protocol simasync_to_simsync(const Protocol& p) {
  Protocol q = p;
  q.name = p.name + "@simsync";
  q.target_model = Model::kSimSync;
  // Compose as if the board were still empty.
  q.compose = [compose = p.compose](const LocalView& view, BoardView board) {
    return compose(view, board.prefix(0));
  };
  return q;
}

Protocol simsync_to_freeasync(const Protocol& p) {
  Protocol q = p;
  q.name = p.name + "@freeasync";
  q.target_model = Model::kFreeAsync;
  // v_i wakes once i - 1 messages are written, so nodes write in id order
  // and v_i composes exactly as the i-th chosen node would under p.
  q.activation = [](const LocalView& view, BoardView board) {
    return static_cast<int>(board.size()) == view.self_id - 1;
  };
  return q;
}

Protocol freeasync_to_freesync(const Protocol& p) {
  Protocol q = p;
  q.name = p.name + "@freesync";
  q.target_model = Model::kFreeSync;
  q.compose_from_activation_snapshot = true;
  q.reads_board_order = true;
  return q;
}

}  // namespace

Protocol lift(const Protocol& p, Model target) {
  const auto from = static_cast<int>(p.target_model);
  const auto to = static_cast<int>(target);
  if (to != from + 1) {
    throw InvalidLift("cannot lift '" + p.name + "' from " + to_string(p.target_model) +
                      " to " + to_string(target));
  }
  switch (p.target_model) {
    case Model::kSimAsync: return simasync_to_simsync(p);
    case Model::kSimSync: return simsync_to_freeasync(p);
    case Model::kFreeAsync: return freeasync_to_freesync(p);
    case Model::kFreeSync: break;
  }
  throw InvalidLift("no model above freesync");
}

Protocol lift_to(const Protocol& p, Model target) {
  if (static_cast<int>(target) < static_cast<int>(p.target_model)) {
    throw InvalidLift("cannot lift '" + p.name + "' down from " + to_string(p.target_model) +
                      " to " + to_string(target));
  }
  Protocol q = p;
  while (q.target_model != target) q = lift(q, static_cast<Model>(static_cast<int>(q.target_model) + 1));
  return q;
}

}  // namespace whiteboard
