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

// Invocation/response histories of register operations.

#ifndef KSLIDE_HISTORY_HPP
#define KSLIDE_HISTORY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kslide/consensus.hpp"
#include "kslide/register.hpp"

namespace kslide {

enum class EventKind : std::uint8_t { Invoke, Respond };
enum class OpKind : std::uint8_t { Write, Read };

struct Event {
  EventKind kind = EventKind::Invoke;
  ProcessId pid = 1;
  OpKind op = OpKind::Read;
  Value value = 0;               // written value, Write only
  std::optional<Window> result;  // Respond of Read only
  std::uint64_t timestamp = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

struct History {
  std::size_t k = 1;
  std::vector<Event> events;

  friend bool operator==(const History&, const History&) = default;
};

/// A matched (or still pending) invocation.
struct Operation {
  ProcessId pid = 1;
  OpKind op = OpKind::Read;
  Value value = 0;
  std::optional<Window> result;
  std::uint64_t invoked = 0;
  std::optional<std::uint64_t> responded;

  bool pending() const noexcept { return !responded.has_value(); }

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// Throws Error(MalformedHistory) unless timestamps strictly increase, every
/// response matches the single open invocation of its pid, and read results
/// are well-formed windows of size k.
void validate(const History& h);

/// Operations in invocation order. Validates first.
std::vector<Operation> operations(const History& h);

}  // namespace kslide

#endif  // KSLIDE_HISTORY_HPP
