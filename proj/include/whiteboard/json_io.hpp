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


#ifndef WHITEBOARD_JSON_IO_HPP_
#define WHITEBOARD_JSON_IO_HPP_

#include <iosfwd>

#include "json.hpp"
#include "whiteboard/adversary.hpp"
#include "whiteboard/engine.hpp"
#include "whiteboard/verify.hpp"

namespace whiteboard {

// Keys keep insertion order so every dump is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Field& field);
Json to_json(const Payload& payload);
Json to_json(const Message& message);
Json to_json(const Output& output);
Json to_json(const StepRecord& record);
Json to_json(const SweepReport& report);
Json to_json(const verify::AuditReport& report);

// One JSON line per step, then {"output":...,"stats":...}.
void write_trace(std::ostream& os, const RunResult& result);

// Partial trace of a deadlocked run, then {"deadlock":{"step":...,"board_len":...}}.
void write_trace(std::ostream& os, const DeadlockError& deadlock);

}  // namespace whiteboard

#endif  // WHITEBOARD_JSON_IO_HPP_
