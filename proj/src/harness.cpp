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

#include "kslide/harness.hpp"

#include <sstream>

#include "kslide/error.hpp"
#include "kslide/protocol.hpp"
#include "kslide/sim.hpp"
#include "kslide/trace.hpp"
#include "kslide/valence.hpp"

namespace kslide::harness {

namespace {

constexpr std::size_t kViolationsInSummary = 10;
constexpr std::size_t kViolateResults = 16;

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); }

std::vector<Value> checked_inputs(std::size_t k, std::size_t n, std::vector<Value> inputs) {
  if (k == 0) invalid("k must be at least 1");
  if (n == 0 || n > kMaxProcesses) invalid("n must be in [1, " + std::to_string(kMaxProcesses) + "]");
  if (inputs.empty()) return default_inputs(n);
  if (inputs.size() != n) {
    invalid("expected " + std::to_string(n) + " inputs, got " + std::to_string(inputs.size()));
  }
  return inputs;
}

std::string decisions_text(const std::map<ProcessId, Value>& d) {
  std::string out;
  for (const auto& [pid, v] : d) {
    if (!out.empty()) out += ", ";
    out += "p" + std::to_string(pid) + " decides " + std::to_string(v);
  }
  return out.empty() ? "no decisions" : out;
}

std::string set_text(const std::set<ProcessId>& s) {
  std::string out = "{";
  for (ProcessId p : s) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

std::string broken(const PropertyReport& r) {
  std::string out;
  if (!r.validity) out += "validity ";
  if (!r.agreement) out += "agreement ";
  if (!r.termination) out += "termination ";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string line(const TracePayload& payload) {
  return serialize(TraceRecord{kSchemaVersion, payload}) + '\n';
}

ViolationRecord violation_record(std::size_t k, const std::vector<Value>& inputs,
                                 const Schedule& s, const Outcome& outcome) {
  ViolationRecord v;
  static_cast<OutcomeRecord&>(v) = make_outcome_record(k, inputs, s, outcome);
  return v;
}

std::string op_text(const Operation& op) {
  const std::string who = "p" + std::to_string(op.pid);
  if (op.op == OpKind::Write) return who + ":w(" + std::to_string(op.value) + ")";
  return who + ":r->" + op.result->to_string();
}

}  // namespace

std::vector<Value> default_inputs(std::size_t n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<Value>(i));
  return out;
}

Report verify(std::size_t k, std::size_t n, std::vector<Value> inputs, bool with_crashes) {
  inputs = checked_inputs(k, n, std::move(inputs));
  const Protocol protocol = sliding_window_consensus();
  const VerificationReport vr = verify_all(protocol, k, inputs, with_crashes);

  Report r;
  r.counters.crash_free = vr.crash_free;
  r.counters.with_crashes = vr.with_crashes;
  r.counters.violations = vr.violations.size();
  r.verdict = vr.violations.empty() ? 0 : 1;

  std::ostringstream summary;
  summary << vr.crash_free << " crash-free schedules, ";
  if (with_crashes) summary << vr.with_crashes << " with crashes, ";
  summary << vr.violations.size() << " violations\n";
  for (std::size_t i = 0; i < vr.violations.size(); ++i) {
    const Violation& v = vr.violations[i];
    const Outcome outcome = run_schedule(protocol, inputs, k, v.schedule);
    if (i < kViolationsInSummary) {
      summary << "violation " << v.schedule.to_string() << ": " << decisions_text(outcome.decisions)
              << " (" << broken(v.report) << ")\n";
    }
    r.trace += line(violation_record(k, inputs, v.schedule, outcome));
  }
  if (vr.violations.size() > kViolationsInSummary) {
    summary << "... " << vr.violations.size() - kViolationsInSummary << " more in the trace\n";
  }
  r.summary = summary.str();
  return r;
}

Report violate(std::size_t k) {
  if (k == 0) invalid("k must be at least 1");
  const std::size_t n = k + 1;
  if (n > kMaxProcesses) invalid("k must be at most " + std::to_string(kMaxProcesses - 1));
  const std::vector<Value> inputs = default_inputs(n);
  const Protocol protocol = sliding_window_consensus();
  const std::vector<Schedule> found = find_violation(protocol, k, inputs, kViolateResults);

  Report r;
  r.counters.violations = found.size();
  r.verdict = found.empty() ? 0 : 1;
  std::ostringstream summary;
  if (found.empty()) {
    summary << "no violation found with " << n << " processes\n";
    r.summary = summary.str();
    return r;
  }

  const Schedule& first = found.front();
  const Outcome outcome = run_schedule(protocol, inputs, k, first);
  summary << "disagreement with " << n << " processes: " << decisions_text(outcome.decisions) << '\n'
          << "schedule " << first.to_string() << '\n'
          << found.size() << " violating schedules reported\n";
  r.summary = summary.str();

  r.trace += line(ScheduleRecord{k, inputs, first});
  r.trace += line(make_outcome_record(k, inputs, first, outcome));
  for (const Schedule& s : found) {
    r.trace += line(violation_record(k, inputs, s, run_schedule(protocol, inputs, k, s)));
  }
  return r;
}

Report replay(std::size_t k, std::size_t n, std::vector<Value> inputs, const Schedule& schedule) {
  inputs = checked_inputs(k, n, std::move(inputs));
  const Outcome outcome = run_schedule(sliding_window_consensus(), inputs, k, schedule);
  const OutcomeRecord rec = make_outcome_record(k, inputs, schedule, outcome);

  Report r;
  r.verdict = rec.report.safe() ? 0 : 1;
  r.counters.violations = r.verdict;
  std::ostringstream summary;
  summary << "schedule " << schedule.to_string() << ": " << decisions_text(outcome.decisions)
          << "; crashed " << set_text(outcome.crashed) << "; pending " << set_text(outcome.pending)
          << '\n'
          << "validity=" << rec.report.validity << " agreement=" << rec.report.agreement
          << " termination=" << rec.report.termination << '\n';
  r.summary = summary.str();
  r.trace = line(rec);
  return r;
}

Report valence(std::size_t k, std::size_t n, std::vector<Value> inputs, GraphFormat format) {
  inputs = checked_inputs(k, n, std::move(inputs));
  const Protocol protocol = sliding_window_consensus();
  const ValenceGraph g = valence_map(initial_configuration(protocol, k, inputs), protocol);

  Report r;
  r.counters.nodes = g.size();
  bool disagreement = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Valence v = g.valence(i);
    if (v.bivalent()) ++r.counters.bivalent;
    if (v.monovalent()) ++r.counters.monovalent;
    if (g.critical(i)) ++r.counters.critical;
    std::set<Value> decided;
    for (const auto& [pid, d] : g.nodes[i].decisions()) decided.insert(d);
    if (decided.size() > 1) disagreement = true;
  }
  r.verdict = disagreement ? 1 : 0;

  std::ostringstream summary;
  summary << "root " << g.valence(0).to_string() << "; " << r.counters.nodes << " nodes, "
          << r.counters.bivalent << " bivalent, " << r.counters.monovalent << " monovalent, "
          << r.counters.critical << " critical\n";
  if (disagreement) summary << "a configuration with two different decisions is reachable\n";
  r.summary = summary.str();

  switch (format) {
    case GraphFormat::Text: r.trace = g.to_text(); break;
    case GraphFormat::Dot: r.trace = g.to_dot(); break;
    case GraphFormat::Json:
      for (std::size_t i = 0; i < g.size(); ++i) {
        ValenceNodeRecord node{i, g.decisions[i], g.critical(i), g.nodes[i], {}};
        for (std::size_t e : g.out_edges[i]) node.edges.emplace_back(g.edges[e].step, g.edges[e].to);
        r.trace += line(node);
      }
      break;
  }
  return r;
}

Report lincheck_stress(const StressRun& run) {
  if (run.histories == 0) invalid("at least one history is required");
  if (run.options.k == 0) invalid("k must be at least 1");
  if (run.options.threads < 2) invalid("stress needs at least 2 threads");
  if (run.options.threads * run.options.ops_per_thread > 64) {
    invalid("threads * ops must not exceed 64");
  }

  Report r;
  std::string first_failure;
  std::string first_history;
  for (std::size_t i = 0; i < run.histories; ++i) {
    StressOptions opts = run.options;
    opts.seed = run.options.seed + i;
    const History h = stress(opts);
    ++r.counters.histories;
    if (i == 0) first_history = serialize_history(h);
    if (!check_linearizable(h).linearizable) {
      if (r.counters.failures == 0) first_failure = serialize_history(h);
      ++r.counters.failures;
    }
  }
  r.verdict = r.counters.failures == 0 ? 0 : 1;
  r.trace = r.counters.failures == 0 ? first_history : first_failure;

  std::ostringstream summary;
  summary << r.counters.histories << " histories (" << run.options.threads << " threads x "
          << run.options.ops_per_thread << " ops, k=" << run.options.k << ", "
          << (run.options.implementation == Implementation::Concurrent ? "concurrent" : "window-short mutant")
          << "): " << r.counters.failures << " not linearizable\n";
  r.summary = summary.str();
  return r;
}

Report lincheck_file(std::string_view text) {
  const History h = parse_history(text);
  const LinearizationResult result = check_linearizable(h);
  Report r;
  r.counters.histories = 1;
  r.counters.failures = result.linearizable ? 0 : 1;
  r.verdict = result.linearizable ? 0 : 1;
  std::ostringstream summary;
  summary << "history with " << operations(h).size() << " operations (k=" << h.k << "): "
          << (result.linearizable ? "linearizable" : "not linearizable") << '\n';
  if (result.linearizable) {
    summary << "witness:";
    for (const Operation& op : result.witness) summary << ' ' << op_text(op);
    summary << '\n';
  }
  r.summary = summary.str();
  return r;
}

}  // namespace kslide::harness
