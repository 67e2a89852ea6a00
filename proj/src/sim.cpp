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

#include "kslide/sim.hpp"

#include <algorithm>
#include <random>

#include "kslide/error.hpp"

namespace kslide {

Outcome run_schedule(const Protocol& protocol, std::span<const Value> inputs, std::size_t k,
                     const Schedule& sched) {
  Outcome out;
  out.history.k = k;
  Configuration cfg = initial_configuration(protocol, k, inputs);
  std::uint64_t clock = 0;

  for (const Step& step : sched.steps) {
    StepEffect effect;
    cfg = apply_step(protocol, cfg, step, &effect);
    if (step.kind == Step::Kind::Crash) continue;

    // Steps are atomic, so each one is an adjacent invoke/respond pair.
    const bool is_write = effect.op.kind == RegisterOp::Kind::Write;
    Event invoke;
    invoke.kind = EventKind::Invoke;
    invoke.pid = step.pid;
    invoke.op = is_write ? OpKind::Write : OpKind::Read;
    invoke.value = is_write ? effect.op.value : 0;
    invoke.timestamp = clock++;
    Event respond = invoke;
    respond.kind = EventKind::Respond;
    respond.result = effect.read_result;
    respond.timestamp = clock++;
    out.history.events.push_back(std::move(invoke));
    out.history.events.push_back(std::move(respond));
  }

  for (const auto& p : cfg.processes) {
    if (p.status == ProcessStatus::Crashed) out.crashed.insert(p.pid);
    if (p.status == ProcessStatus::Running) out.pending.insert(p.pid);
  }
  out.decisions = cfg.decisions();
  out.final_config = std::move(cfg);
  return out;
}

Configuration run_from(const Protocol& protocol, const Configuration& start, const Schedule& sched) {
  Configuration cfg = start;
  for (const Step& step : sched.steps) cfg = apply_step(protocol, cfg, step);
  return cfg;
}

PropertyReport check_outcome(const Outcome& outcome) {
  return check_outcome(outcome.final_config.inputs(), outcome.decisions, outcome.crashed);
}

std::vector<std::size_t> step_counts(const Protocol& protocol, std::size_t n) {
  std::vector<std::size_t> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(protocol.ops_per_process(static_cast<ProcessId>(i + 1)));
  return ops;
}

namespace {

// Interleaves budget[i] Exec steps of every pid i+1. A process whose budget is
// below its full step count gets its Crash right after its last Exec.
class Interleaver {
 public:
  Interleaver(std::span<const std::size_t> ops, std::vector<std::size_t> budget,
              const std::function<bool(const Schedule&)>& visit)
      : ops_(ops), remaining_(std::move(budget)), visit_(visit) {
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      if (remaining_[i] == 0 && ops_[i] > 0) current_.steps.push_back(Step::crash(pid(i)));
    }
  }

  bool run() { return descend(); }

 private:
  static ProcessId pid(std::size_t i) { return static_cast<ProcessId>(i + 1); }

  bool descend() {
    bool any = false;
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      if (remaining_[i] == 0) continue;
      any = true;
      const std::size_t mark = current_.steps.size();
      --remaining_[i];
      current_.steps.push_back(Step::exec(pid(i)));
      const std::size_t executed = ++executed_[i];
      if (remaining_[i] == 0 && executed < ops_[i]) current_.steps.push_back(Step::crash(pid(i)));
      const bool keep_going = descend();
      --executed_[i];
      ++remaining_[i];
      current_.steps.resize(mark);
      if (!keep_going) return false;
    }
    if (!any) return visit_(current_);
    return true;
  }

  std::span<const std::size_t> ops_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> executed_ = std::vector<std::size_t>(remaining_.size(), 0);
  const std::function<bool(const Schedule&)>& visit_;
  Schedule current_;
};

}  // namespace

void for_each_schedule(std::span<const std::size_t> ops, bool with_crashes,
                       const std::function<bool(const Schedule&)>& visit) {
  if (ops.empty()) throw Error(ErrorCode::InvalidArgument, "at least one process is required");
  const std::vector<std::size_t> full(ops.begin(), ops.end());
  if (!Interleaver(ops, full, visit).run() || !with_crashes) return;

  // Odometer over budgets, most significant digit = pid 1, counting down
  // from the full budget; the all-full vector was visited above.
  std::vector<std::size_t> budget = full;
  while (true) {
    std::size_t i = budget.size();
    while (i > 0) {
      --i;
      if (budget[i] > 0) {
        --budget[i];
        for (std::size_t j = i + 1; j < budget.size(); ++j) budget[j] = full[j];
        break;
      }
      if (i == 0) return;
    }
    if (!Interleaver(ops, budget, visit).run()) return;
  }
}

std::vector<Schedule> enumerate_schedules(std::span<const std::size_t> ops, bool with_crashes) {
  std::vector<Schedule> out;
  for_each_schedule(ops, with_crashes, [&](const Schedule& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

VerificationReport verify_all(const Protocol& protocol, std::size_t k,
                              std::span<const Value> inputs, bool with_crashes) {
  VerificationReport report;
  const auto ops = step_counts(protocol, inputs.size());
  for_each_schedule(ops, with_crashes, [&](const Schedule& s) {
    const Outcome outcome = run_schedule(protocol, inputs, k, s);
    const PropertyReport props = check_outcome(outcome);
    ++report.schedules_checked;
    ++(s.has_crash() ? report.with_crashes : report.crash_free);
    if (!props.holds()) report.violations.push_back({s, props});
    return true;
  });
  return report;
}

Schedule eviction_schedule(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "window size must be at least 1");
  Schedule s;
  s.steps = {Step::exec(1), Step::exec(1)};
  for (std::size_t p = 2; p <= k + 1; ++p) s.steps.push_back(Step::exec(static_cast<ProcessId>(p)));
  s.steps.push_back(Step::exec(2));
  return s;
}

std::vector<Schedule> find_violation(const Protocol& protocol, std::size_t k,
                                     std::span<const Value> inputs, std::size_t max_results,
                                     bool with_crashes) {
  std::vector<Schedule> found;
  if (max_results == 0) return found;

  auto violates = [&](const Schedule& s) {
    return !check_outcome(run_schedule(protocol, inputs, k, s)).safe();
  };

  if (inputs.size() == k + 1 && protocol.registers == 1) {
    const auto ops = step_counts(protocol, inputs.size());
    const bool fits = ops[0] >= 2 && ops[1] >= 2 &&
                      std::all_of(ops.begin() + 2, ops.end(), [](std::size_t n) { return n >= 1; });
    if (fits) {
      Schedule canonical = eviction_schedule(k);
      if (violates(canonical)) found.push_back(std::move(canonical));
    }
  }

  for_each_schedule(step_counts(protocol, inputs.size()), with_crashes, [&](const Schedule& s) {
    if (found.size() >= max_results) return false;
    if (violates(s) && (found.empty() || found.front() != s)) found.push_back(s);
    return found.size() < max_results;
  });
  return found;
}

Schedule random_schedule(std::span<const std::size_t> ops, std::uint64_t seed,
                         double crash_probability) {
  if (!(crash_probability >= 0.0 && crash_probability <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "crash probability must be in [0, 1]");
  }
  // Raw engine output only: distributions are not portable across standard
  // libraries and schedules must be reproducible from the seed.
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> remaining(ops.begin(), ops.end());
  Schedule s;
  while (true) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] > 0) live.push_back(i);
    }
    if (live.empty()) break;
    const std::size_t i = live[rng() % live.size()];
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto pid = static_cast<ProcessId>(i + 1);
    if (u < crash_probability) {
      s.steps.push_back(Step::crash(pid));
      remaining[i] = 0;
    } else {
      s.steps.push_back(Step::exec(pid));
      --remaining[i];
    }
  }
  return s;
}

}  // namespace kslide
