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

#include "kslide/register.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "kslide/error.hpp"

namespace kslide {

Window::Window(std::size_t k) : slots_(k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "window size must be at least 1");
}

Window::Window(std::vector<Slot> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw Error(ErrorCode::InvalidArgument, "window size must be at least 1");
}

Window Window::suffix(std::size_t k_prime) const {
  if (k_prime == 0 || k_prime > slots_.size()) {
    throw Error(ErrorCode::InvalidArgument, "suffix length must be in [1, " +
                                                std::to_string(slots_.size()) + "]");
  }
  return Window(std::vector<Slot>(slots_.end() - static_cast<std::ptrdiff_t>(k_prime),
                                  slots_.end()));
}

std::size_t Window::bottoms() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](const Slot& s) { return !s; }));
}

bool Window::well_formed() const noexcept {
  if (slots_.empty()) return false;
  auto first_value = std::find_if(slots_.begin(), slots_.end(),
                                  [](const Slot& s) { return s.has_value(); });
  return std::all_of(first_value, slots_.end(), [](const Slot& s) { return s.has_value(); });
}

std::string Window::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i != 0) out << ',';
    if (slots_[i]) {
      out << *slots_[i];
    } else {
      out << "⊥";
    }
  }
  out << ']';
  return out.str();
}

std::optional<Value> first_non_bottom(const Window& window) {
  for (const Slot& s : window.slots()) {
    if (s) return s;
  }
  return std::nullopt;
}

SlidingRegister::SlidingRegister(std::size_t k) : k_(k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "window size must be at least 1");
  ring_.reserve(k);
}

SlidingRegister SlidingRegister::restore(std::size_t k, std::uint64_t writes,
                                         std::vector<Value> contents) {
  SlidingRegister reg(k);
  if (contents.size() != std::min<std::uint64_t>(writes, k)) {
    throw Error(ErrorCode::InvalidArgument, "register contents must hold min(writes, k) values");
  }
  reg.writes_ = writes;
  if (writes <= k) {
    reg.ring_ = std::move(contents);
  } else {
    reg.ring_.resize(k);
    for (std::size_t i = 0; i < k; ++i) reg.ring_[(writes % k + i) % k] = contents[i];
  }
  return reg;
}

void SlidingRegister::write(Value v) {
  if (ring_.size() < k_) {
    ring_.push_back(v);
  } else {
    ring_[writes_ % k_] = v;
  }
  ++writes_;
}

std::vector<Value> SlidingRegister::contents() const {
  if (writes_ <= k_) return ring_;
  std::vector<Value> out;
  out.reserve(k_);
  const std::size_t oldest = writes_ % k_;
  for (std::size_t i = 0; i < k_; ++i) out.push_back(ring_[(oldest + i) % k_]);
  return out;
}

Window SlidingRegister::read() const {
  std::vector<Slot> slots(k_ - ring_.size());
  for (Value v : contents()) slots.emplace_back(v);
  return Window(std::move(slots));
}

std::size_t SlidingRegister::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(writes_) ^ (k_ * 0x9e3779b97f4a7c15ULL);
  for (Value v : contents()) h = h * 1099511628211ULL ^ std::hash<Value>{}(v);
  return h;
}

bool operator==(const SlidingRegister& a, const SlidingRegister& b) {
  return a.k_ == b.k_ && a.writes_ == b.writes_ && a.contents() == b.contents();
}

void ConcurrentRegister::write(Value v) {
  std::lock_guard lock(mutex_);
  state_.write(v);
}

Window ConcurrentRegister::read() const {
  std::lock_guard lock(mutex_);
  return state_.read();
}

std::uint64_t ConcurrentRegister::writes() const {
  std::lock_guard lock(mutex_);
  return state_.writes();
}

NarrowView::NarrowView(Register& base, std::size_t k_prime) : base_(&base), k_(k_prime) {
  if (k_prime == 0 || k_prime > base.window_size()) {
    throw Error(ErrorCode::InvalidArgument,
                "narrowed window size must be in [1, " + std::to_string(base.window_size()) + "]");
  }
}

}  // namespace kslide
