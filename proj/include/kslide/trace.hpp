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

// Line-delimited JSON trace records, schema version 1.
//
// Every line is one object with a "type" field (schedule, outcome, violation,
// valence-node, history-event) and "schema_version": 1. Bottom is JSON null
// inside window arrays and schedules are arrays such as ["E1","E1","C2"].
// Keys are emitted in sorted order, so equal records serialize to identical
// bytes.

#ifndef KSLIDE_TRACE_HPP
#define KSLIDE_TRACE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kslide/configuration.hpp"
#include "kslide/consensus.hpp"
#include "kslide/history.hpp"
#include "kslide/schedule.hpp"
#include "kslide/sim.hpp"

namespace kslide {

inline constexpr int kSchemaVersion = 1;

struct ScheduleRecord {
  std::size_t k = 1;
  std::vector<Value> inputs;
  Schedule schedule;

  friend bool operator==(const ScheduleRecord&, const ScheduleRecord&) = default;
};

struct OutcomeRecord {
  std::size_t k = 1;
  std::vector<Value> inputs;
  Schedule schedule;
  std::map<ProcessId, Value> decisions;
  std::set<ProcessId> crashed;
  std::set<ProcessId> pending;
  PropertyReport report;

  friend bool operator==(const OutcomeRecord&, const OutcomeRecord&) = default;
};

/// Same payload as an outcome; tagged separately so consumers can grep for it.
struct ViolationRecord : OutcomeRecord {
  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

struct ValenceNodeRecord {
  std::size_t id = 0;
  std::set<Value> values;
  bool critical = false;
  Configuration config;
  std::vector<std::pair<Step, std::size_t>> edges;

  friend bool operator==(const ValenceNodeRecord&, const ValenceNodeRecord&) = default;
};

struct HistoryEventRecord {
  std::size_t k = 1;
  Event event;

  friend bool operator==(const HistoryEventRecord&, const HistoryEventRecord&) = default;
};

using TracePayload = std::variant<ScheduleRecord, OutcomeRecord, ViolationRecord,
                                  ValenceNodeRecord, HistoryEventRecord>;

struct TraceRecord {
  int schema_version = kSchemaVersion;
  TracePayload payload;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// One line, no trailing newline.
std::string serialize(const TraceRecord& record);

/// Throws Error(MalformedTrace) on bad JSON, unknown types, unsupported
/// schema versions or missing fields.
TraceRecord parse_record(std::string_view line);

/// Parses every non-blank line.
std::vector<TraceRecord> parse_trace(std::string_view text);

OutcomeRecord make_outcome_record(std::size_t k, std::vector<Value> inputs, Schedule schedule,
                                  const Outcome& outcome);

std::string serialize_history(const History& h);

/// Accepts only history-event records sharing one k. Throws
/// Error(MalformedHistory) on anything else, including an empty trace.
History parse_history(std::string_view text);

}  // namespace kslide

#endif  // KSLIDE_TRACE_HPP
