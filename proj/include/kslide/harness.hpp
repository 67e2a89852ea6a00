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

// The verification experiments behind the CLI. Each one returns a verdict
// (0 = all properties hold, 1 = a violation exists), a human summary and a
// trace in the JSON-lines format. Invalid arguments throw
// Error(InvalidArgument).

#ifndef KSLIDE_HARNESS_HPP
#define KSLIDE_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kslide/lincheck.hpp"
#include "kslide/register.hpp"
#include "kslide/schedule.hpp"

namespace kslide::harness {

struct Counters {
  std::uint64_t crash_free = 0;
  std::uint64_t with_crashes = 0;
  std::uint64_t violations = 0;
  std::uint64_t nodes = 0;
  std::uint64_t bivalent = 0;
  std::uint64_t monovalent = 0;
  std::uint64_t critical = 0;
  std::uint64_t histories = 0;
  std::uint64_t failures = 0;
};

struct Report {
  int verdict = 0;
  std::string summary;
  std::string trace;
  Counters counters;
};

/// Largest process count the exhaustive commands accept.
inline constexpr std::size_t kMaxProcesses = 6;

/// Process i proposes i-1.
std::vector<Value> default_inputs(std::size_t n);

/// An empty inputs vector selects default_inputs(n).
Report verify(std::size_t k, std::size_t n, std::vector<Value> inputs, bool with_crashes);

/// Runs k+1 processes with default inputs and reports the eviction schedule
/// plus further violating complete schedules.
Report violate(std::size_t k);

Report replay(std::size_t k, std::size_t n, std::vector<Value> inputs, const Schedule& schedule);

enum class GraphFormat { Text, Dot, Json };

Report valence(std::size_t k, std::size_t n, std::vector<Value> inputs, GraphFormat format);

struct StressRun {
  StressOptions options;
  std::size_t histories = 1000;
};

/// History i uses seed options.seed + i. The trace holds the first history
/// that failed, or the first history when all passed.
Report lincheck_stress(const StressRun& run);

/// Re-checks a serialized history. Throws Error(MalformedHistory) on bad input.
Report lincheck_file(std::string_view text);

}  // namespace kslide::harness

#endif  // KSLIDE_HARNESS_HPP
