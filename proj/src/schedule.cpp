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

#include "kslide/schedule.hpp"

#include <algorithm>
#include <charconv>

#include "kslide/error.hpp"

namespace kslide {

std::string Step::to_string() const {
  return (kind == Kind::Exec ? "E" : "C") + std::to_string(pid);
}

Step Step::parse(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'E' && token[0] != 'C')) {
    throw Error(ErrorCode::MalformedSchedule, "bad step '" + std::string(token) + "'");
  }
  ProcessId pid = 0;
  const auto digits = token.substr(1);
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), pid);
  if (ec != std::errc{} || end != digits.data() + digits.size() || pid == 0) {
    throw Error(ErrorCode::MalformedSchedule, "bad step '" + std::string(token) + "'");
  }
  return token[0] == 'E' ? exec(pid) : crash(pid);
}

bool Schedule::has_crash() const noexcept {
  return std::any_of(steps.begin(), steps.end(),
                     [](const Step& s) { return s.kind == Step::Kind::Crash; });
}

std::string Schedule::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i != 0) out += ',';
    out += steps[i].to_string();
  }
  return out + "]";
}

Schedule Schedule::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '[' && c != ']' && c != '"') cleaned += c;
  }
  Schedule s;
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    s.steps.push_back(Step::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw Error(ErrorCode::MalformedSchedule, "trailing comma in schedule");
  }
  return s;
}

}  // namespace kslide
