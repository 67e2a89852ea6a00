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

// The k-sliding read/write register. A write appends a value to the logical
// sequence; a read returns the last k values written, oldest first, padded on
// the left with bottom when fewer than k writes have happened.

#ifndef KSLIDE_REGISTER_HPP
#define KSLIDE_REGISTER_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kslide {

using Value = std::uint32_t;

/// One window entry. std::nullopt is bottom, which is never writable.
using Slot = std::optional<Value>;

class Window {
 public:
  /// All-bottom window of size k.
  explicit Window(std::size_t k);
  explicit Window(std::vector<Slot> slots);

  std::size_t size() const noexcept { return slots_.size(); }
  const Slot& operator[](std::size_t i) const { return slots_.at(i); }
  std::span<const Slot> slots() const noexcept { return slots_; }

  /// The newest k_prime slots. Requires k_prime <= size().
  Window suffix(std::size_t k_prime) const;

  std::size_t bottoms() const noexcept;

  /// Bottom entries form a prefix and the window is non-empty.
  bool well_formed() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<Slot> slots_;
};

/// Oldest surviving value, or nullopt when every slot is bottom.
std::optional<Value> first_non_bottom(const Window& window);

/// Value-semantics register state: a ring of the last min(writes, k) values
/// plus the total write count. Equality is logical (ring rotation is hidden).
class SlidingRegister {
 public:
  explicit SlidingRegister(std::size_t k);

  /// Rebuilds a state from its logical description. Requires
  /// contents.size() == min(writes, k).
  static SlidingRegister restore(std::size_t k, std::uint64_t writes, std::vector<Value> contents);

  void write(Value v);
  Window read() const;

  std::size_t window_size() const noexcept { return k_; }
  std::uint64_t writes() const noexcept { return writes_; }

  /// Surviving values, oldest first; length is min(writes, k).
  std::vector<Value> contents() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const SlidingRegister& a, const SlidingRegister& b);

 private:
  std::size_t k_;
  std::vector<Value> ring_;
  std::uint64_t writes_ = 0;
};

/// Common interface of the register implementations and views.
class Register {
 public:
  virtual ~Register() = default;

  virtual void write(Value v) = 0;
  virtual Window read() const = 0;
  virtual std::size_t window_size() const noexcept = 0;
};

/// Single-threaded reference implementation.
class SequentialRegister final : public Register {
 public:
  explicit SequentialRegister(std::size_t k) : state_(k) {}

  void write(Value v) override { state_.write(v); }
  Window read() const override { return state_.read(); }
  std::size_t window_size() const noexcept override { return state_.window_size(); }

  const SlidingRegister& state() const noexcept { return state_; }

 private:
  SlidingRegister state_;
};

/// Linearizable implementation: every write and read is one critical section.
class ConcurrentRegister final : public Register {
 public:
  explicit ConcurrentRegister(std::size_t k) : state_(k) {}

  void write(Value v) override;
  Window read() const override;
  std::size_t window_size() const noexcept override { return state_.window_size(); }

  std::uint64_t writes() const;

 private:
  mutable std::mutex mutex_;
  SlidingRegister state_;
};

/// A register of window size k_prime built on top of one of size k >= k_prime.
/// Writes delegate; reads return the newest k_prime slots of the base read.
class NarrowView final : public Register {
 public:
  NarrowView(Register& base, std::size_t k_prime);

  void write(Value v) override { base_->write(v); }
  Window read() const override { return base_->read().suffix(k_); }
  std::size_t window_size() const noexcept override { return k_; }

 private:
  Register* base_;
  std::size_t k_;
};

inline NarrowView narrow(Register& reg, std::size_t k_prime) {
  return NarrowView(reg, k_prime);
}

}  // namespace kslide

#endif  // KSLIDE_REGISTER_HPP
