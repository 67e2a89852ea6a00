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

// Deterministic execution of protocols under explicit schedules, plus
// exhaustive and seeded schedule generation.

#ifndef KSLIDE_SIM_HPP
#define KSLIDE_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "kslide/configuration.hpp"
#include "kslide/consensus.hpp"
#include "kslide/history.hpp"
#include "kslide/protocol.hpp"
#include "kslide/schedule.hpp"

namespace kslide {

struct Outcome {
  std::map<ProcessId, Value> decisions;
  std::set<ProcessId> crashed;
  /// Neither crashed nor finished when the schedule ran out.
  std::set<ProcessId> pending;
  History history;
  Configuration final_config;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Runs sched from the initial configuration; inputs[i] is the proposal of
/// pid i+1. Throws Error(MalformedSchedule) on a step for an unknown, crashed
/// or finished process.
Outcome run_schedule(const Protocol& protocol, std::span<const Value> inputs, std::size_t k,
                     const Schedule& sched);

/// Applies sched to an arbitrary configuration.
Configuration run_from(const Protocol& protocol, const Configuration& start, const Schedule& sched);

PropertyReport check_outcome(const Outcome& outcome);

/// ops[i] = number of shared steps of pid i+1.
std::vector<std::size_t> step_counts(const Protocol& protocol, std::size_t n);

/// Visits every complete interleaving once, branching on pids in increasing
/// order. With crashes, then visits every crash pattern: each process either
/// completes or crashes right after its j-th step (j < its step count); the
/// crash marker sits immediately after that step, or at the very front for
/// j = 0. visit returns false to stop early.
void for_each_schedule(std::span<const std::size_t> ops, bool with_crashes,
                       const std::function<bool(const Schedule&)>& visit);

std::vector<Schedule> enumerate_schedules(std::span<const std::size_t> ops, bool with_crashes);

struct Violation {
  Schedule schedule;
  PropertyReport report;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::uint64_t schedules_checked = 0;
  std::uint64_t crash_free = 0;
  std::uint64_t with_crashes = 0;
  std::vector<Violation> violations;
};

VerificationReport verify_all(const Protocol& protocol, std::size_t k,
                              std::span<const Value> inputs, bool with_crashes);

/// [E1,E1,E2,E3,...,E(k+1),E2]: p1 writes and reads alone, the other k
/// processes write and push p1's value out of the window, then p2 reads.
Schedule eviction_schedule(std::size_t k);

/// Schedules whose outcome breaks validity or agreement. When n == k+1 and the
/// eviction schedule is a violation it comes first; the rest are complete
/// schedules in enumeration order.
std::vector<Schedule> find_violation(const Protocol& protocol, std::size_t k,
                                     std::span<const Value> inputs,
                                     std::size_t max_results = std::numeric_limits<std::size_t>::max(),
                                     bool with_crashes = false);

/// Seeded random interleaving; each time a process is picked it crashes with
/// the given probability instead of stepping. Pure function of its arguments.
Schedule random_schedule(std::span<const std::size_t> ops, std::uint64_t seed,
                         double crash_probability);

}  // namespace kslide

#endif  // KSLIDE_SIM_HPP
