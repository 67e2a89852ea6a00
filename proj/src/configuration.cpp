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

#include "kslide/configuration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kslide/error.hpp"

namespace kslide {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const char* status_name(ProcessStatus s) {
  switch (s) {
    case ProcessStatus::Running: return "running";
    case ProcessStatus::Done: return "done";
    case ProcessStatus::Crashed: return "crashed";
  }
  return "?";
}

[[noreturn]] void malformed(Step step, const std::string& why) {
  throw Error(ErrorCode::MalformedSchedule, "step " + step.to_string() + ": " + why);
}

}  // namespace

const ProcessState& Configuration::process(ProcessId pid) const {
  if (pid == 0 || pid > processes.size()) {
    throw Error(ErrorCode::InvalidArgument, "no process " + std::to_string(pid));
  }
  return processes[pid - 1];
}

std::map<ProcessId, Value> Configuration::decisions() const {
  std::map<ProcessId, Value> out;
  for (const auto& p : processes) {
    if (p.decision) out.emplace(p.pid, *p.decision);
  }
  return out;
}

std::map<ProcessId, Value> Configuration::inputs() const {
  std::map<ProcessId, Value> out;
  for (const auto& p : processes) out.emplace(p.pid, p.local.input);
  return out;
}

bool Configuration::terminal() const noexcept {
  return std::none_of(processes.begin(), processes.end(),
                      [](const ProcessState& p) { return p.status == ProcessStatus::Running; });
}

std::size_t Configuration::progress() const noexcept {
  std::size_t total = 0;
  for (const auto& p : processes) {
    total += p.local.step + (p.status == ProcessStatus::Crashed ? 1 : 0);
  }
  return total;
}

std::string Configuration::to_string() const {
  std::ostringstream out;
  for (const auto& p : processes) {
    out << 'p' << p.pid << "{in=" << p.local.input << " pc=" << p.local.step << ' '
        << status_name(p.status);
    if (p.decision) out << " d=" << *p.decision;
    if (!p.local.observed.empty()) {
      out << " seen=";
      for (const auto& w : p.local.observed) out << w.to_string();
    }
    out << "} ";
  }
  for (std::size_t r = 0; r < registers.size(); ++r) {
    out << 'R' << r << '=' << registers[r].read().to_string() << "/w" << registers[r].writes();
    if (r + 1 != registers.size()) out << ' ';
  }
  return out.str();
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  std::size_t h = 0;
  for (const auto& p : c.processes) {
    h = mix(h, p.pid);
    h = mix(h, static_cast<std::size_t>(p.status));
    h = mix(h, p.local.input);
    h = mix(h, p.local.step);
    h = mix(h, p.decision ? *p.decision + 1 : 0);
    for (const auto& w : p.local.observed) {
      for (const auto& s : w.slots()) h = mix(h, s ? *s + 1 : 0);
    }
  }
  for (const auto& r : c.registers) h = mix(h, r.hash());
  return h;
}

Configuration initial_configuration(const Protocol& protocol, std::size_t k,
                                    std::span<const Value> inputs) {
  if (inputs.empty()) throw Error(ErrorCode::InvalidArgument, "at least one process is required");
  if (protocol.registers == 0) throw Error(ErrorCode::InvalidArgument, "protocol uses no registers");
  Configuration cfg;
  cfg.registers.assign(protocol.registers, SlidingRegister(k));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    ProcessState p;
    p.pid = static_cast<ProcessId>(i + 1);
    p.local.input = inputs[i];
    if (protocol.ops_per_process(p.pid) == 0) {
      p.status = ProcessStatus::Done;
      p.decision = protocol.decide(p.pid, p.local);
    }
    cfg.processes.push_back(std::move(p));
  }
  return cfg;
}

std::optional<RegisterOp> pending_op(const Protocol& protocol, const Configuration& cfg,
                                     ProcessId pid) {
  const ProcessState& p = cfg.process(pid);
  if (p.status != ProcessStatus::Running) return std::nullopt;
  return protocol.next_op(pid, p.local);
}

Configuration apply_step(const Protocol& protocol, const Configuration& cfg, Step step,
                         StepEffect* effect) {
  if (step.pid == 0 || step.pid > cfg.processes.size()) malformed(step, "unknown process");
  const ProcessState& before = cfg.processes[step.pid - 1];
  if (before.status == ProcessStatus::Crashed) malformed(step, "process already crashed");
  if (before.status == ProcessStatus::Done) malformed(step, "process already finished");

  Configuration next = cfg;
  ProcessState& p = next.processes[step.pid - 1];
  if (step.kind == Step::Kind::Crash) {
    p.status = ProcessStatus::Crashed;
    return next;
  }

  const RegisterOp op = protocol.next_op(p.pid, p.local);
  if (op.reg >= next.registers.size()) {
    throw Error(ErrorCode::InvalidArgument, "protocol accessed register R" + std::to_string(op.reg) +
                                                " but declares " +
                                                std::to_string(next.registers.size()));
  }
  std::optional<Window> seen;
  if (op.kind == RegisterOp::Kind::Write) {
    next.registers[op.reg].write(op.value);
  } else {
    seen = next.registers[op.reg].read();
    p.local.observed.push_back(*seen);
  }
  ++p.local.step;
  if (p.local.step >= protocol.ops_per_process(p.pid)) {
    p.status = ProcessStatus::Done;
    p.decision = protocol.decide(p.pid, p.local);
  }
  if (effect) *effect = StepEffect{op, std::move(seen)};
  return next;
}

}  // namespace kslide
