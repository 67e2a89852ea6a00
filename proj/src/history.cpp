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

#include "kslide/history.hpp"

#include <map>
#include <string>

#include "kslide/error.hpp"

namespace kslide {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedHistory, why);
}

}  // namespace

std::vector<Operation> operations(const History& h) {
  if (h.k == 0) malformed("window size must be at least 1");
  std::vector<Operation> ops;
  std::map<ProcessId, std::size_t> open;
  bool first = true;
  std::uint64_t last = 0;

  for (const Event& e : h.events) {
    if (!first && e.timestamp <= last) malformed("timestamps must strictly increase");
    first = false;
    last = e.timestamp;
    const std::string who = "process " + std::to_string(e.pid);

    if (e.kind == EventKind::Invoke) {
      if (open.contains(e.pid)) malformed(who + " invokes while an operation is open");
      if (e.result) malformed(who + " invocation carries a result");
      open.emplace(e.pid, ops.size());
      ops.push_back(Operation{e.pid, e.op, e.op == OpKind::Write ? e.value : 0, std::nullopt,
                              e.timestamp, std::nullopt});
      continue;
    }

    const auto it = open.find(e.pid);
    if (it == open.end()) malformed(who + " responds without an open invocation");
    Operation& op = ops[it->second];
    open.erase(it);
    if (op.op != e.op) malformed(who + " response kind does not match its invocation");
    if (e.op == OpKind::Read) {
      if (!e.result) malformed(who + " read response has no result");
      if (e.result->size() != h.k || !e.result->well_formed()) {
        malformed(who + " read result is not a well-formed window of size " +
                  std::to_string(h.k));
      }
      op.result = e.result;
    } else if (e.result) {
      malformed(who + " write response carries a result");
    }
    op.responded = e.timestamp;
  }
  return ops;
}

void validate(const History& h) { (void)operations(h); }

}  // namespace kslide
