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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "kslide/error.hpp"
#include "kslide/protocol.hpp"
#include "kslide/sim.hpp"
#include "support/oracles.hpp"

using kslide::ErrorCode;
using kslide::Schedule;
using kslide::Step;
using kslide::Value;

namespace {

const kslide::Protocol& alg() {
  static const kslide::Protocol p = kslide::sliding_window_consensus();
  return p;
}

std::vector<Value> distinct_inputs(std::size_t n) {
  std::vector<Value> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(static_cast<Value>(i));
  return v;
}

Schedule from_word(const std::vector<std::uint32_t>& word) {
  Schedule s;
  for (auto pid : word) s.steps.push_back(Step::exec(pid));
  return s;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const kslide::Error& e) {
    return e.code();
  }
  FAIL("expected a kslide::Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("run_schedule examples") {
  const std::vector<Value> in{0, 1};
  auto out = kslide::run_schedule(alg(), in, 2, Schedule::parse("E1,E1,E2,E2"));
  CHECK(out.decisions == std::map<kslide::ProcessId, Value>{{1, 0}, {2, 0}});

  out = kslide::run_schedule(alg(), in, 1, Schedule::parse("E1,E1,E2,E2"));
  CHECK(out.decisions == std::map<kslide::ProcessId, Value>{{1, 0}, {2, 1}});
  CHECK_FALSE(kslide::check_outcome(out).agreement);

  out = kslide::run_schedule(alg(), in, 2, Schedule::parse("[E1, C1, E2, E2]"));
  CHECK(out.decisions == std::map<kslide::ProcessId, Value>{{2, 0}});
  CHECK(out.crashed == std::set<kslide::ProcessId>{1});
  CHECK(out.pending.empty());
  CHECK(kslide::check_outcome(out).holds());

  out = kslide::run_schedule(alg(), in, 2, Schedule::parse("E1"));
  CHECK(out.decisions.empty());
  CHECK(out.pending == std::set<kslide::ProcessId>{1, 2});
}

TEST_CASE("run_schedule records one adjacent invoke/respond pair per step") {
  const std::vector<Value> in{0, 1, 2};
  const auto out = kslide::run_schedule(alg(), in, 2, Schedule::parse("E2,E1,E3,E1,C2,E3"));
  REQUIRE(out.history.events.size() == 10);
  const auto ops = kslide::operations(out.history);
  REQUIRE(ops.size() == 5);
  for (const auto& op : ops) CHECK(*op.responded == op.invoked + 1);
  CHECK(ops[0].op == kslide::OpKind::Write);
  CHECK(ops[0].value == 1);
}

TEST_CASE("run_schedule is deterministic") {
  const std::vector<Value> in{3, 5, 7};
  const auto s = Schedule::parse("E3,E1,E2,C1,E2,E3");
  CHECK(kslide::run_schedule(alg(), in, 2, s) == kslide::run_schedule(alg(), in, 2, s));
}

TEST_CASE("malformed schedules are rejected") {
  const std::vector<Value> in{0, 1};
  auto run = [&](const char* text) { kslide::run_schedule(alg(), in, 2, Schedule::parse(text)); };
  CHECK(code_of([&] { run("E3"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { run("C1,E1"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { run("C1,C1"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { run("E1,E1,E1"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { Schedule::parse("E1,X2"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { Schedule::parse("E0"); }) == ErrorCode::MalformedSchedule);
  CHECK(code_of([&] { Schedule::parse("E1,,E2"); }) == ErrorCode::MalformedSchedule);
}

TEST_CASE("schedule text round-trips") {
  const auto s = Schedule::parse("E1,C2,E10");
  CHECK(s.to_string() == "[E1,C2,E10]");
  CHECK(Schedule::parse(s.to_string()) == s);
  CHECK(s.has_crash());
  CHECK(Schedule::parse("").size() == 0);
}

TEST_CASE("crash-free enumeration matches the permutation oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::vector<std::size_t> ops(n, 2);
    const auto got = kslide::enumerate_schedules(ops, false);
    CHECK(got.size() == oracle::crash_free_count(n));
    const auto words = oracle::pid_words(n);
    REQUIRE(got.size() == words.size());
    for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i] == from_word(words[i]));
  }
  CHECK(oracle::crash_free_count(1) == 1);
  CHECK(oracle::crash_free_count(2) == 6);
  CHECK(oracle::crash_free_count(3) == 90);
  CHECK(oracle::crash_free_count(4) == 2520);
}

TEST_CASE("crash enumeration: distinct, valid and counted by budget vectors") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::vector<std::size_t> ops(n, 2);
    const auto all = kslide::enumerate_schedules(ops, true);
    const std::set<Schedule> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    const auto crashy = std::count_if(all.begin(), all.end(), [](const Schedule& s) { return s.has_crash(); });
    CHECK(static_cast<std::uint64_t>(crashy) == oracle::crash_count(n));
    CHECK(all.size() == oracle::crash_free_count(n) + oracle::crash_count(n));

    const auto inputs = distinct_inputs(n);
    for (const auto& s : all) {
      const auto out = kslide::run_schedule(alg(), inputs, n, s);
      REQUIRE(out.pending.empty());
      std::map<kslide::ProcessId, int> crashes;
      for (const auto& step : s.steps) {
        if (step.kind == Step::Kind::Crash) ++crashes[step.pid];
      }
      for (const auto& [pid, c] : crashes) REQUIRE(c == 1);
    }
  }
  CHECK(oracle::crash_count(4) == 4845);
}

TEST_CASE("early stop") {
  const std::vector<std::size_t> ops(3, 2);
  int seen = 0;
  kslide::for_each_schedule(ops, true, [&](const Schedule&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("simulated decisions match the hand-run oracle on every interleaving") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto inputs = distinct_inputs(n);
      for (const auto& word : oracle::pid_words(n)) {
        const auto out = kslide::run_schedule(alg(), inputs, k, from_word(word));
        const auto expect = oracle::decide_by_hand(k, inputs, word);
        REQUIRE(out.decisions.size() == expect.size());
        for (const auto& [pid, v] : expect) REQUIRE(out.decisions.at(pid) == v);
      }
    }
  }
}

TEST_CASE("verify_all: no violations with n <= k, crashes included") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= k; ++n) {
      const auto r = kslide::verify_all(alg(), k, distinct_inputs(n), true);
      CHECK(r.violations.empty());
      CHECK(r.crash_free == oracle::crash_free_count(n));
      CHECK(r.with_crashes == oracle::crash_count(n));
      CHECK(r.schedules_checked == r.crash_free + r.with_crashes);
    }
  }
}

TEST_CASE("verify_all: k=1, n=2 disagrees but never breaks validity") {
  const auto r = kslide::verify_all(alg(), 1, distinct_inputs(2), true);
  REQUIRE_FALSE(r.violations.empty());
  for (const auto& v : r.violations) {
    CHECK(v.report.validity);
    CHECK_FALSE(v.report.agreement);
  }
}

TEST_CASE("validity survives every crash pattern, even over capacity") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto r = kslide::verify_all(alg(), k, std::vector<Value>{4, 8, 15, 16}, true);
    for (const auto& v : r.violations) REQUIRE(v.report.validity);
  }
}

TEST_CASE("eviction schedule shape") {
  CHECK(kslide::eviction_schedule(1).to_string() == "[E1,E1,E2,E2]");
  CHECK(kslide::eviction_schedule(2).to_string() == "[E1,E1,E2,E3,E2]");
  CHECK(kslide::eviction_schedule(3).to_string() == "[E1,E1,E2,E3,E4,E2]");
}

TEST_CASE("find_violation examples") {
  auto found = kslide::find_violation(alg(), 1, distinct_inputs(2));
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().to_string() == "[E1,E1,E2,E2]");

  found = kslide::find_violation(alg(), 2, distinct_inputs(3));
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().to_string() == "[E1,E1,E2,E3,E2]");
  const auto out = kslide::run_schedule(alg(), distinct_inputs(3), 2, found.front());
  CHECK(out.decisions.at(1) == 0);
  CHECK(out.decisions.at(2) == 1);
  CHECK(out.pending == std::set<kslide::ProcessId>{3});

  CHECK(kslide::find_violation(alg(), 3, distinct_inputs(3)).empty());
  CHECK(kslide::find_violation(alg(), 3, distinct_inputs(4), 1).size() == 1);
}

TEST_CASE("find_violation at k=1, n=2 finds exactly the oracle's violators") {
  const auto inputs = distinct_inputs(2);
  std::set<Schedule> expect;
  for (const auto& word : oracle::pid_words(2)) {
    const auto d = oracle::decide_by_hand(1, inputs, word);
    std::set<Value> values;
    for (const auto& [pid, v] : d) values.insert(v);
    if (values.size() > 1) expect.insert(from_word(word));
  }
  const auto found = kslide::find_violation(alg(), 1, inputs);
  const std::set<Schedule> got(found.begin(), found.end());
  CHECK(got.size() == found.size());
  CHECK(got == expect);
  CHECK(expect.size() == 2);
}

TEST_CASE("find_violation: every returned schedule really violates") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto inputs = distinct_inputs(k + 1);
    const auto found = kslide::find_violation(alg(), k, inputs, 50);
    REQUIRE_FALSE(found.empty());
    CHECK(found.front() == kslide::eviction_schedule(k));
    for (const auto& s : found) {
      REQUIRE_FALSE(kslide::check_outcome(kslide::run_schedule(alg(), inputs, k, s)).safe());
    }
  }
}

TEST_CASE("random schedules") {
  const std::vector<std::size_t> ops{2, 2, 2};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto a = kslide::random_schedule(ops, seed, 0.2);
    CHECK(a == kslide::random_schedule(ops, seed, 0.2));
    const auto out = kslide::run_schedule(alg(), distinct_inputs(3), 3, a);
    CHECK(out.pending.empty());
    for (kslide::ProcessId pid = 1; pid <= 3; ++pid) {
      const auto execs = std::count(a.steps.begin(), a.steps.end(), Step::exec(pid));
      if (!out.crashed.contains(pid)) CHECK(execs == 2);
    }
    CHECK_FALSE(kslide::random_schedule(ops, seed, 0.0).has_crash());
  }
  CHECK(code_of([&] { kslide::random_schedule(ops, 1, 1.5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("user protocol with two registers runs under the simulator") {
  const auto p = oracle::crossed_registers();
  const std::vector<Value> in{3, 4};
  auto out = kslide::run_schedule(p, in, 1, Schedule::parse("E1,E1,E2,E2"));
  CHECK(out.decisions == std::map<kslide::ProcessId, Value>{{1, 3}, {2, 3}});
  out = kslide::run_schedule(p, in, 1, Schedule::parse("E1,E2,E1,E2"));
  CHECK(out.decisions == std::map<kslide::ProcessId, Value>{{1, 4}, {2, 3}});
}
