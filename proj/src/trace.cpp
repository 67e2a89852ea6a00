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

#include "kslide/trace.hpp"

#include <json.hpp>

#include "kslide/error.hpp"
#include "kslide/valence.hpp"

namespace kslide {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedTrace, why); }

json window_json(const Window& w) {
  json out = json::array();
  for (const Slot& s : w.slots()) out.push_back(s ? json(*s) : json(nullptr));
  return out;
}

Window window_from(const json& j) {
  std::vector<Slot> slots;
  for (const json& s : j) {
    if (s.is_null()) {
      slots.emplace_back(std::nullopt);
    } else {
      slots.emplace_back(s.get<Value>());
    }
  }
  Window w(std::move(slots));
  if (!w.well_formed()) malformed("window " + j.dump() + " has a bottom after a value");
  return w;
}

json schedule_json(const Schedule& s) {
  json out = json::array();
  for (const Step& step : s.steps) out.push_back(step.to_string());
  return out;
}

Schedule schedule_from(const json& j) {
  Schedule s;
  for (const json& step : j) s.steps.push_back(Step::parse(step.get<std::string>()));
  return s;
}

json decisions_json(const std::map<ProcessId, Value>& d) {
  json out = json::object();
  for (const auto& [pid, v] : d) out[std::to_string(pid)] = v;
  return out;
}

std::map<ProcessId, Value> decisions_from(const json& j) {
  std::map<ProcessId, Value> out;
  for (const auto& [key, v] : j.items()) {
    std::size_t used = 0;
    const unsigned long pid = std::stoul(key, &used);
    if (used != key.size() || pid == 0) malformed("bad process id '" + key + "'");
    out.emplace(static_cast<ProcessId>(pid), v.get<Value>());
  }
  return out;
}

const char* status_name(ProcessStatus s) {
  switch (s) {
    case ProcessStatus::Running: return "running";
    case ProcessStatus::Done: return "done";
    case ProcessStatus::Crashed: return "crashed";
  }
  return "?";
}

ProcessStatus status_from(const std::string& s) {
  if (s == "running") return ProcessStatus::Running;
  if (s == "done") return ProcessStatus::Done;
  if (s == "crashed") return ProcessStatus::Crashed;
  malformed("unknown process status '" + s + "'");
}

json config_json(const Configuration& cfg) {
  json procs = json::array();
  for (const auto& p : cfg.processes) {
    json observed = json::array();
    for (const auto& w : p.local.observed) observed.push_back(window_json(w));
    procs.push_back({{"pid", p.pid},
                     {"status", status_name(p.status)},
                     {"input", p.local.input},
                     {"step", p.local.step},
                     {"observed", observed},
                     {"decision", p.decision ? json(*p.decision) : json(nullptr)}});
  }
  json regs = json::array();
  for (const auto& r : cfg.registers) {
    regs.push_back({{"k", r.window_size()}, {"writes", r.writes()}, {"contents", r.contents()}});
  }
  return {{"processes", procs}, {"registers", regs}};
}

Configuration config_from(const json& j) {
  Configuration cfg;
  for (const json& p : j.at("processes")) {
    ProcessState ps;
    ps.pid = p.at("pid").get<ProcessId>();
    ps.status = status_from(p.at("status").get<std::string>());
    ps.local.input = p.at("input").get<Value>();
    ps.local.step = p.at("step").get<std::size_t>();
    for (const json& w : p.at("observed")) ps.local.observed.push_back(window_from(w));
    if (!p.at("decision").is_null()) ps.decision = p.at("decision").get<Value>();
    cfg.processes.push_back(std::move(ps));
  }
  for (const json& r : j.at("registers")) {
    cfg.registers.push_back(SlidingRegister::restore(r.at("k").get<std::size_t>(),
                                                     r.at("writes").get<std::uint64_t>(),
                                                     r.at("contents").get<std::vector<Value>>()));
  }
  return cfg;
}

json report_json(const PropertyReport& r) {
  return {{"validity", r.validity}, {"agreement", r.agreement}, {"termination", r.termination}};
}

void put_outcome(json& j, const OutcomeRecord& r) {
  j["k"] = r.k;
  j["n"] = r.inputs.size();
  j["inputs"] = r.inputs;
  j["steps"] = schedule_json(r.schedule);
  j["decisions"] = decisions_json(r.decisions);
  j["crashed"] = r.crashed;
  j["pending"] = r.pending;
  j["report"] = report_json(r.report);
}

OutcomeRecord outcome_from(const json& j) {
  OutcomeRecord r;
  r.k = j.at("k").get<std::size_t>();
  r.inputs = j.at("inputs").get<std::vector<Value>>();
  if (j.at("n").get<std::size_t>() != r.inputs.size()) malformed("n does not match inputs");
  r.schedule = schedule_from(j.at("steps"));
  r.decisions = decisions_from(j.at("decisions"));
  r.crashed = j.at("crashed").get<std::set<ProcessId>>();
  r.pending = j.at("pending").get<std::set<ProcessId>>();
  const json& rep = j.at("report");
  r.report = {rep.at("validity").get<bool>(), rep.at("agreement").get<bool>(),
              rep.at("termination").get<bool>()};
  return r;
}

json event_json(std::size_t k, const Event& e) {
  json j = {{"k", k},
            {"kind", e.kind == EventKind::Invoke ? "invoke" : "respond"},
            {"pid", e.pid},
            {"op", e.op == OpKind::Write ? "write" : "read"},
            {"ts", e.timestamp}};
  if (e.op == OpKind::Write) j["value"] = e.value;
  if (e.result) j["result"] = window_json(*e.result);
  return j;
}

HistoryEventRecord event_from(const json& j) {
  HistoryEventRecord r;
  r.k = j.at("k").get<std::size_t>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "invoke" && kind != "respond") malformed("unknown event kind '" + kind + "'");
  r.event.kind = kind == "invoke" ? EventKind::Invoke : EventKind::Respond;
  r.event.pid = j.at("pid").get<ProcessId>();
  const auto op = j.at("op").get<std::string>();
  if (op != "write" && op != "read") malformed("unknown operation '" + op + "'");
  r.event.op = op == "write" ? OpKind::Write : OpKind::Read;
  r.event.timestamp = j.at("ts").get<std::uint64_t>();
  if (r.event.op == OpKind::Write) r.event.value = j.at("value").get<Value>();
  if (j.contains("result")) r.event.result = window_from(j.at("result"));
  return r;
}

struct Encoder {
  json& j;

  void operator()(const ScheduleRecord& r) const {
    j["type"] = "schedule";
    j["k"] = r.k;
    j["n"] = r.inputs.size();
    j["inputs"] = r.inputs;
    j["steps"] = schedule_json(r.schedule);
  }
  void operator()(const OutcomeRecord& r) const {
    j["type"] = "outcome";
    put_outcome(j, r);
  }
  void operator()(const ViolationRecord& r) const {
    j["type"] = "violation";
    put_outcome(j, r);
  }
  void operator()(const ValenceNodeRecord& r) const {
    j["type"] = "valence-node";
    j["id"] = r.id;
    j["values"] = r.values;
    j["valence"] = Valence(r.values).to_string();
    j["critical"] = r.critical;
    j["config"] = config_json(r.config);
    json edges = json::array();
    for (const auto& [step, to] : r.edges) edges.push_back({{"step", step.to_string()}, {"to", to}});
    j["edges"] = edges;
  }
  void operator()(const HistoryEventRecord& r) const {
    j = event_json(r.k, r.event);
    j["type"] = "history-event";
  }
};

}  // namespace

std::string serialize(const TraceRecord& record) {
  json j = json::object();
  std::visit(Encoder{j}, record.payload);
  j["schema_version"] = record.schema_version;
  return j.dump();
}

TraceRecord parse_record(std::string_view line) {
  try {
    const json j = json::parse(line);
    if (!j.is_object()) malformed("trace record is not a JSON object");
    TraceRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    if (rec.schema_version != kSchemaVersion) {
      malformed("unsupported schema_version " + std::to_string(rec.schema_version));
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "schedule") {
      ScheduleRecord r;
      r.k = j.at("k").get<std::size_t>();
      r.inputs = j.at("inputs").get<std::vector<Value>>();
      if (j.at("n").get<std::size_t>() != r.inputs.size()) malformed("n does not match inputs");
      r.schedule = schedule_from(j.at("steps"));
      rec.payload = std::move(r);
    } else if (type == "outcome") {
      rec.payload = outcome_from(j);
    } else if (type == "violation") {
      ViolationRecord r;
      static_cast<OutcomeRecord&>(r) = outcome_from(j);
      rec.payload = std::move(r);
    } else if (type == "valence-node") {
      ValenceNodeRecord r;
      r.id = j.at("id").get<std::size_t>();
      r.values = j.at("values").get<std::set<Value>>();
      r.critical = j.at("critical").get<bool>();
      r.config = config_from(j.at("config"));
      for (const json& e : j.at("edges")) {
        r.edges.emplace_back(Step::parse(e.at("step").get<std::string>()), e.at("to").get<std::size_t>());
      }
      rec.payload = std::move(r);
    } else if (type == "history-event") {
      rec.payload = event_from(j);
    } else {
      malformed("unknown record type '" + type + "'");
    }
    return rec;
  } catch (const json::exception& e) {
    malformed(std::string("bad trace record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedTrace) throw;
    malformed(std::string("bad trace record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    malformed(std::string("bad trace record: ") + e.what());
  } catch (const std::out_of_range& e) {
    malformed(std::string("bad trace record: ") + e.what());
  }
}

std::vector<TraceRecord> parse_trace(std::string_view text) {
  std::vector<TraceRecord> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_record(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

OutcomeRecord make_outcome_record(std::size_t k, std::vector<Value> inputs, Schedule schedule,
                                  const Outcome& outcome) {
  OutcomeRecord r;
  r.k = k;
  r.inputs = std::move(inputs);
  r.schedule = std::move(schedule);
  r.decisions = outcome.decisions;
  r.crashed = outcome.crashed;
  r.pending = outcome.pending;
  r.report = check_outcome(outcome);
  return r;
}

std::string serialize_history(const History& h) {
  std::string out;
  for (const Event& e : h.events) {
    out += serialize(TraceRecord{kSchemaVersion, HistoryEventRecord{h.k, e}});
    out += '\n';
  }
  return out;
}

History parse_history(std::string_view text) {
  std::vector<TraceRecord> records;
  try {
    records = parse_trace(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedHistory, e.what());
  }
  if (records.empty()) throw Error(ErrorCode::MalformedHistory, "history file has no events");
  History h;
  bool first = true;
  for (const TraceRecord& rec : records) {
    const auto* ev = std::get_if<HistoryEventRecord>(&rec.payload);
    if (!ev) throw Error(ErrorCode::MalformedHistory, "history files hold history-event records only");
    if (first) {
      h.k = ev->k;
      first = false;
    } else if (ev->k != h.k) {
      throw Error(ErrorCode::MalformedHistory, "history events disagree on k");
    }
    h.events.push_back(ev->event);
  }
  validate(h);
  return h;
}

}  // namespace kslide
