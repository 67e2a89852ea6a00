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

#ifndef KSLIDE_SCHEDULE_HPP
#define KSLIDE_SCHEDULE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kslide/consensus.hpp"

namespace kslide {

/// Exec(pid) runs the next shared-register access of pid; Crash(pid) removes
/// pid for good. Text form is "E3" / "C3".
struct Step {
  enum class Kind : std::uint8_t { Exec, Crash };

  Kind kind = Kind::Exec;
  ProcessId pid = 1;

  static Step exec(ProcessId p) { return {Kind::Exec, p}; }
  static Step crash(ProcessId p) { return {Kind::Crash, p}; }

  std::string to_string() const;
  static Step parse(std::string_view token);

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Schedule {
  std::vector<Step> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool has_crash() const noexcept;

  /// "[E1,E1,C2]"
  std::string to_string() const;
  /// Accepts "E1,E1,C2", optionally wrapped in [] and with blanks.
  static Schedule parse(std::string_view text);

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;
};

}  // namespace kslide

#endif  // KSLIDE_SCHEDULE_HPP
