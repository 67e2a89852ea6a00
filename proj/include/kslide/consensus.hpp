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

#ifndef KSLIDE_CONSENSUS_HPP
#define KSLIDE_CONSENSUS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "kslide/register.hpp"

namespace kslide {

/// Dense process ids, 1..n.
using ProcessId = std::uint32_t;

struct Decision {
  Value value;
  ProcessId decider;

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct PropertyReport {
  bool validity = true;
  bool agreement = true;
  bool termination = true;

  bool holds() const noexcept { return validity && agreement && termination; }
  bool safe() const noexcept { return validity && agreement; }

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Evaluates the three consensus properties for one finished run. Crashed
/// processes are exempt from termination.
PropertyReport check_outcome(const std::map<ProcessId, Value>& inputs,
                             const std::map<ProcessId, Value>& decisions,
                             const std::set<ProcessId>& crashed);

/// One-shot consensus for up to k processes over a single k-sliding register:
/// write the proposal, read the window, decide its oldest value.
class ConsensusInstance {
 public:
  /// Owns a fresh ConcurrentRegister of window size k.
  explicit ConsensusInstance(std::size_t k);
  /// Uses an external register; capacity is its window size.
  explicit ConsensusInstance(Register& reg);

  /// Throws ProtocolMisuse on a repeated pid and CapacityExceeded when a
  /// (k+1)-th distinct process shows up, unless capacity enforcement is off.
  Decision propose(ProcessId pid, Value v);

  std::size_t capacity() const noexcept { return reg_->window_size(); }

  /// The over-capacity demo needs to run k+1 proposers.
  void set_enforce_capacity(bool enforce) noexcept { enforce_capacity_ = enforce; }

 private:
  void admit(ProcessId pid);

  std::unique_ptr<Register> owned_;
  Register* reg_;
  bool enforce_capacity_ = true;
  std::mutex admission_mutex_;
  std::set<ProcessId> participants_;
};

}  // namespace kslide

#endif  // KSLIDE_CONSENSUS_HPP
