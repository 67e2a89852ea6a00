/*
 * Copyright (c) 2026, The kslide Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kslide/error.hpp"

namespace kslide {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::MalformedSchedule: return "malformed schedule";
    case ErrorCode::MalformedHistory: return "malformed history";
    case ErrorCode::MalformedTrace: return "malformed trace";
    case ErrorCode::ProtocolMisuse: return "protocol misuse";
    case ErrorCode::CapacityExceeded: return "capacity exceeded";
    case ErrorCode::ExplorationBound: return "exploration bound exceeded";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace kslide
