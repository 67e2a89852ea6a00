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

#include "kslide/protocol.hpp"

#include "kslide/error.hpp"

namespace kslide {

std::string RegisterOp::to_string() const {
  if (kind == Kind::Write) return "write(R" + std::to_string(reg) + "," + std::to_string(value) + ")";
  return "read(R" + std::to_string(reg) + ")";
}

Protocol sliding_window_consensus() {
  Protocol p;
  p.name = "sliding-window-consensus";
  p.registers = 1;
  p.ops_per_process = [](ProcessId) -> std::size_t { return 2; };
  p.next_op = [](ProcessId, const LocalState& local) {
    return local.step == 0 ? RegisterOp::write(0, local.input) : RegisterOp::read(0);
  };
  p.decide = [](ProcessId, const LocalState& local) -> Value {
    const auto d = first_non_bottom(local.observed.back());
    if (!d) throw Error(ErrorCode::Internal, "window read after own write holds no value");
    return *d;
  };
  return p;
}

}  // namespace kslide
