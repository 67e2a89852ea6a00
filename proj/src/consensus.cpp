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

#include "kslide/consensus.hpp"

#include <string>

#include "kslide/error.hpp"

namespace kslide {

PropertyReport check_outcome(const std::map<ProcessId, Value>& inputs,
                             const std::map<ProcessId, Value>& decisions,
                             const std::set<ProcessId>& crashed) {
  PropertyReport report;
  std::set<Value> proposed;
  for (const auto& [pid, v] : inputs) proposed.insert(v);

  for (const auto& [pid, v] : decisions) {
    if (!proposed.contains(v)) report.validity = false;
    if (v != decisions.begin()->second) report.agreement = false;
  }
  for (const auto& [pid, v] : inputs) {
    if (!crashed.contains(pid) && !decisions.contains(pid)) report.termination = false;
  }
  return report;
}

ConsensusInstance::ConsensusInstance(std::size_t k)
    : owned_(std::make_unique<ConcurrentRegister>(k)), reg_(owned_.get()) {}

ConsensusInstance::ConsensusInstance(Register& reg) : reg_(&reg) {}

void ConsensusInstance::admit(ProcessId pid) {
  std::lock_guard lock(admission_mutex_);
  if (participants_.contains(pid)) {
    throw Error(ErrorCode::ProtocolMisuse,
                "process " + std::to_string(pid) + " already proposed on this instance");
  }
  if (enforce_capacity_ && participants_.size() >= capacity()) {
    throw Error(ErrorCode::CapacityExceeded,
                "instance admits at most " + std::to_string(capacity()) + " processes");
  }
  participants_.insert(pid);
}

Decision ConsensusInstance::propose(ProcessId pid, Value v) {
  admit(pid);
  reg_->write(v);
  const Window seen = reg_->read();
  const auto d = first_non_bottom(seen);
  // Our own write precedes the read, so the window cannot be all bottom.
  if (!d) throw Error(ErrorCode::Internal, "read after write returned an empty window");
  return Decision{*d, pid};
}

}  // namespace kslide
