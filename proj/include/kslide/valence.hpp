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

// Exact valence analysis over the configuration graph of a bounded protocol.
//
// The decision set of a configuration is every value decided in it or in any
// configuration reachable from it. A configuration is v-valent when that set
// is {v} and bivalent when it has two or more values. The graph is a DAG
// (every transition adds one unit of progress), so decision sets are computed
// exactly, in decreasing progress order, with no sampling.

#ifndef KSLIDE_VALENCE_HPP
#define KSLIDE_VALENCE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kslide/configuration.hpp"
#include "kslide/protocol.hpp"
#include "kslide/schedule.hpp"

namespace kslide {

class Valence {
 public:
  enum class Kind : std::uint8_t {
    /// Nothing decidable; reachable only when every process crashed before
    /// deciding (crash-aware exploration).
    Undecided,
    Monovalent,
    Bivalent,
  };

  Valence() = default;
  explicit Valence(std::set<Value> values) : values_(std::move(values)) {}

  Kind kind() const noexcept;
  bool monovalent() const noexcept { return kind() == Kind::Monovalent; }
  bool bivalent() const noexcept { return kind() == Kind::Bivalent; }
  const std::set<Value>& values() const noexcept { return values_; }

  /// "Monovalent(0)", "Bivalent({0,1})", "Undecided"
  std::string to_string() const;

  friend bool operator==(const Valence&, const Valence&) = default;

 private:
  std::set<Value> values_;
};

struct ExploreOptions {
  /// Also branch on Crash(pid) for every running process.
  bool crash_aware = false;
  std::size_t max_steps_per_process = 16;
  std::size_t max_nodes = 1u << 20;
};

struct ValenceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Step step;

  friend bool operator==(const ValenceEdge&, const ValenceEdge&) = default;
};

/// Reachability graph rooted at node 0. Node ids follow breadth-first
/// discovery with successors taken in pid order, Exec before Crash.
struct ValenceGraph {
  std::vector<Configuration> nodes;
  std::vector<std::set<Value>> decisions;
  std::vector<ValenceEdge> edges;
  std::vector<std::vector<std::size_t>> out_edges;

  std::size_t size() const noexcept { return nodes.size(); }
  Valence valence(std::size_t node) const { return Valence(decisions.at(node)); }
  /// Non-terminal bivalent node whose every Exec successor is monovalent.
  bool critical(std::size_t node) const;
  std::vector<std::size_t> critical_nodes() const;

  /// An extension of node that ends in a configuration where some process
  /// decided v. Throws InvalidArgument if v is not in the node's decision set.
  Schedule witness(std::size_t node, Value v) const;

  std::string to_text() const;
  std::string to_dot() const;
};

/// Throws Error(ExplorationBound) if a process needs more steps than the bound
/// or the graph outgrows max_nodes.
ValenceGraph valence_map(const Configuration& initial, const Protocol& protocol,
                         const ExploreOptions& options = {});

std::set<Value> reachable_decisions(const Configuration& cfg, const Protocol& protocol,
                                    bool crash_aware = false);

Valence classify(const Configuration& cfg, const Protocol& protocol,
                 const ExploreOptions& options = {});

struct CriticalConfig {
  Configuration config;
  std::map<ProcessId, std::pair<Configuration, Valence>> successors;
};

std::vector<CriticalConfig> find_critical(const Configuration& initial, const Protocol& protocol,
                                          const ExploreOptions& options = {});

/// True iff running a's pending op then b's gives the same configuration as
/// b's then a's. Throws InvalidArgument unless a != b and both are running.
bool check_commutation(const Protocol& protocol, const Configuration& cfg, ProcessId a, ProcessId b);

}  // namespace kslide

#endif  // KSLIDE_VALENCE_HPP
