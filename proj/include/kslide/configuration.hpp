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

#ifndef KSLIDE_CONFIGURATION_HPP
#define KSLIDE_CONFIGURATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kslide/protocol.hpp"
#include "kslide/register.hpp"
#include "kslide/schedule.hpp"

namespace kslide {

enum class ProcessStatus : std::uint8_t { Running, Done, Crashed };

struct ProcessState {
  ProcessId pid = 1;
  ProcessStatus status = ProcessStatus::Running;
  LocalState local;
  std::optional<Value> decision;

  friend bool operator==(const ProcessState&, const ProcessState&) = default;
};

/// Global state: every process's local state plus every register. Processes
/// are stored in pid order, so member-wise equality is canonical.
struct Configuration {
  std::vector<ProcessState> processes;
  std::vector<SlidingRegister> registers;

  const ProcessState& process(ProcessId pid) const;
  std::map<ProcessId, Value> decisions() const;
  std::map<ProcessId, Value> inputs() const;
  bool terminal() const noexcept;
  /// Number of steps taken plus crashes; every transition adds exactly one.
  std::size_t progress() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

/// inputs[i] is the proposal of pid i+1. Every register gets window size k.
Configuration initial_configuration(const Protocol& protocol, std::size_t k,
                                    std::span<const Value> inputs);

/// The next register access of pid, or nullopt if it is done or crashed.
std::optional<RegisterOp> pending_op(const Protocol& protocol, const Configuration& cfg,
                                     ProcessId pid);

/// What one Exec step did, for history recording.
struct StepEffect {
  RegisterOp op;
  std::optional<Window> read_result;
};

/// Throws Error(MalformedSchedule) if pid is unknown, crashed or finished.
Configuration apply_step(const Protocol& protocol, const Configuration& cfg, Step step,
                         StepEffect* effect = nullptr);

}  // namespace kslide

#endif  // KSLIDE_CONFIGURATION_HPP
