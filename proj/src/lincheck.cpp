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

#include "kslide/lincheck.hpp"

#include <algorithm>
#include <atomic>
#include <latch>
#include <memory>
#include <random>
#include <thread>
#include <unordered_set>

#include "kslide/error.hpp"

namespace kslide {

namespace {

struct MemoKey {
  std::uint64_t done;
  std::vector<Slot> window;

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(key.done);
    for (const Slot& s : key.window) h = h * 1099511628211ULL ^ (s ? *s + 1 : 0);
    return h;
  }
};

class Search {
 public:
  Search(std::size_t k, std::vector<Operation> ops) : k_(k), ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (!ops_[i].pending()) required_ |= bit(i);
    }
  }

  bool run() { return descend(0, SlidingRegister(k_)); }

  std::vector<Operation> witness() const {
    std::vector<Operation> out;
    for (std::size_t i : order_) out.push_back(ops_[i]);
    return out;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // i may go next if no other unlinearized completed op responded before i
  // was invoked.
  bool minimal(std::size_t i, std::uint64_t done) const {
    for (std::size_t j = 0; j < ops_.size(); ++j) {
      if (j == i || (done & bit(j)) || ops_[j].pending()) continue;
      if (*ops_[j].responded < ops_[i].invoked) return false;
    }
    return true;
  }

  bool descend(std::uint64_t done, const SlidingRegister& reg) {
    if ((done & required_) == required_) return true;
    const Window now = reg.read();
    MemoKey key{done, std::vector<Slot>(now.slots().begin(), now.slots().end())};
    if (!seen_.insert(std::move(key)).second) return false;

    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (done & bit(i)) continue;
      const Operation& op = ops_[i];
      if (op.op == OpKind::Read && op.pending()) continue;
      if (!minimal(i, done)) continue;

      SlidingRegister next = reg;
      if (op.op == OpKind::Write) {
        next.write(op.value);
      } else if (*op.result != now) {
        continue;
      }
      order_.push_back(i);
      if (descend(done | bit(i), next)) return true;
      order_.pop_back();
    }
    return false;
  }

  std::size_t k_;
  std::vector<Operation> ops_;
  std::uint64_t required_ = 0;
  std::vector<std::size_t> order_;
  std::unordered_set<MemoKey, MemoKeyHash> seen_;
};

}  // namespace

LinearizationResult check_linearizable(const History& h) {
  std::vector<Operation> ops = operations(h);
  if (ops.size() > 64) {
    throw Error(ErrorCode::InvalidArgument, "histories are limited to 64 operations");
  }
  Search search(h.k, std::move(ops));
  LinearizationResult result;
  result.linearizable = search.run();
  if (result.linearizable) result.witness = search.witness();
  return result;
}

ShortWindowRegister::ShortWindowRegister(std::size_t k) : k_(k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "window size must be at least 1");
}

void ShortWindowRegister::write(Value v) {
  std::lock_guard lock(mutex_);
  kept_.push_back(v);
  if (kept_.size() > k_ - 1) kept_.erase(kept_.begin());
}

Window ShortWindowRegister::read() const {
  std::lock_guard lock(mutex_);
  std::vector<Slot> slots(k_ - kept_.size());
  for (Value v : kept_) slots.emplace_back(v);
  return Window(std::move(slots));
}

History stress(const StressOptions& options) {
  if (options.threads < 2) throw Error(ErrorCode::InvalidArgument, "stress needs at least 2 threads");
  if (options.threads * options.ops_per_thread > 64) {
    throw Error(ErrorCode::InvalidArgument, "stress histories are limited to 64 operations");
  }

  std::unique_ptr<Register> reg;
  if (options.implementation == Implementation::Concurrent) {
    reg = std::make_unique<ConcurrentRegister>(options.k);
  } else {
    reg = std::make_unique<ShortWindowRegister>(options.k);
  }

  std::atomic<std::uint64_t> clock{0};
  std::vector<std::vector<Event>> per_thread(options.threads);
  std::latch start(static_cast<std::ptrdiff_t>(options.threads));

  auto worker = [&](std::size_t t) {
    std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ULL + t + 1);
    auto& events = per_thread[t];
    const auto pid = static_cast<ProcessId>(t + 1);
    start.arrive_and_wait();
    for (std::size_t i = 0; i < options.ops_per_thread; ++i) {
      Event invoke;
      invoke.pid = pid;
      invoke.op = (rng() & 1) ? OpKind::Write : OpKind::Read;
      invoke.value = invoke.op == OpKind::Write
                         ? static_cast<Value>(t * options.ops_per_thread + i + 1)
                         : 0;
      Event respond = invoke;
      respond.kind = EventKind::Respond;

      invoke.timestamp = clock.fetch_add(1);
      if (invoke.op == OpKind::Write) {
        reg->write(invoke.value);
      } else {
        respond.result = reg->read();
      }
      respond.timestamp = clock.fetch_add(1);
      events.push_back(std::move(invoke));
      events.push_back(std::move(respond));
    }
  };

  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < options.threads; ++t) pool.emplace_back(worker, t);
  }

  History h;
  h.k = options.k;
  for (auto& events : per_thread) {
    std::move(events.begin(), events.end(), std::back_inserter(h.events));
  }
  std::sort(h.events.begin(), h.events.end(),
            [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  return h;
}

}  // namespace kslide
