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

#ifndef WHITEBOARD_ERRORS_HPP_
#define WHITEBOARD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace whiteboard {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WHITEBOARD_DEFINE_ERROR(Name)   \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

WHITEBOARD_DEFINE_ERROR(InvalidGraph);
WHITEBOARD_DEFINE_ERROR(InvalidSpec);
WHITEBOARD_DEFINE_ERROR(NotInInputClass);
WHITEBOARD_DEFINE_ERROR(CapExceeded);
WHITEBOARD_DEFINE_ERROR(ParseError);
WHITEBOARD_DEFINE_ERROR(InvalidPayload);
WHITEBOARD_DEFINE_ERROR(InvalidLift);
WHITEBOARD_DEFINE_ERROR(InvalidOrder);
WHITEBOARD_DEFINE_ERROR(SchedulerError);
WHITEBOARD_DEFINE_ERROR(TagMismatch);
WHITEBOARD_DEFINE_ERROR(MalformedInstance);
WHITEBOARD_DEFINE_ERROR(OddDegreeSum);

#undef WHITEBOARD_DEFINE_ERROR

}  // namespace whiteboard

#endif  // WHITEBOARD_ERRORS_HPP_
