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

// Exhaustive linearizability checking of k-sliding register histories.
//
// Depth-first search over linearization prefixes in the style of Wing & Gong:
// an operation may be linearized next only if no other unlinearized completed
// operation responded before it was invoked. Visited (linearized set, window)
// pairs are memoized; the window is a complete summary of register state for
// the purpose of future reads. Pending writes may or may not take effect;
// pending reads are dropped since they constrain nothing.

#ifndef KSLIDE_LINCHECK_HPP
#define KSLIDE_LINCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

#include "kslide/history.hpp"
#include "kslide/register.hpp"

namespace kslide {

struct LinearizationResult {
  bool linearizable = false;
  /// Operations in linearization order (only when linearizable). Includes the
  /// pending writes that were chosen to take effect.
  std::vector<Operation> witness;
};

/// Histories are limited to 64 operations. Throws Error(MalformedHistory) on
/// structural problems, which is distinct from a negative verdict.
LinearizationResult check_linearizable(const History& h);

/// Off-by-one mutant: keeps only k-1 values, so once k writes have happened a
/// read still shows a bottom in the oldest slot.
class ShortWindowRegister final : public Register {
 public:
  explicit ShortWindowRegister(std::size_t k);

  void write(Value v) override;
  Window read() const override;
  std::size_t window_size() const noexcept override { return k_; }

 private:
  mutable std::mutex mutex_;
  std::size_t k_;
  std::vector<Value> kept_;
};

enum class Implementation : std::uint8_t { Concurrent, WindowShortMutant };

struct StressOptions {
  std::size_t threads = 4;
  std::size_t ops_per_thread = 5;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  Implementation implementation = Implementation::Concurrent;
};

/// Drives a fresh register from real threads. Each thread draws its op mix
/// from its own seeded generator; invoke and respond events are stamped from a
/// single atomic counter. Written values are distinct across the history.
History stress(const StressOptions& options);

}  // namespace kslide

#endif  // KSLIDE_LINCHECK_HPP
