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

// Protocol descriptors for the simulator and the valence explorer.
//
// A process's local state is its input plus every window it has read, in
// order. That is the full information a deterministic process over registers
// can have, so next_op and decide are pure functions of it.

#ifndef KSLIDE_PROTOCOL_HPP
#define KSLIDE_PROTOCOL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kslide/consensus.hpp"
#include "kslide/register.hpp"

namespace kslide {

using RegisterId = std::size_t;

struct RegisterOp {
  enum class Kind : std::uint8_t { Write, Read };

  Kind kind = Kind::Read;
  RegisterId reg = 0;
  Value value = 0;  // meaningful for writes only

  static RegisterOp write(RegisterId r, Value v) { return {Kind::Write, r, v}; }
  static RegisterOp read(RegisterId r) { return {Kind::Read, r, 0}; }

  std::string to_string() const;

  friend bool operator==(const RegisterOp&, const RegisterOp&) = default;
};

struct LocalState {
  Value input = 0;
  std::size_t step = 0;
  std::vector<Window> observed;

  friend bool operator==(const LocalState&, const LocalState&) = default;
};

struct Protocol {
  std::string name;
  std::size_t registers = 1;
  std::function<std::size_t(ProcessId)> ops_per_process;
  std::function<RegisterOp(ProcessId, const LocalState&)> next_op;
  /// Called once, after the last step.
  std::function<Value(ProcessId, const LocalState&)> decide;
};

/// write(input) to register 0, read it, decide the oldest value in the window.
Protocol sliding_window_consensus();

}  // namespace kslide

#endif  // KSLIDE_PROTOCOL_HPP
