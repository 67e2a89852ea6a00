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

#include "kslide/valence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kslide/error.hpp"

namespace kslide {

namespace {

std::string value_set(const std::set<Value>& values) {
  std::string out = "{";
  bool first = true;
  for (Value v : values) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Valence::Kind Valence::kind() const noexcept {
  if (values_.empty()) return Kind::Undecided;
  return values_.size() == 1 ? Kind::Monovalent : Kind::Bivalent;
}

std::string Valence::to_string() const {
  switch (kind()) {
    case Kind::Undecided: return "Undecided";
    case Kind::Monovalent: return "Monovalent(" + std::to_string(*values_.begin()) + ")";
    case Kind::Bivalent: return "Bivalent(" + value_set(values_) + ")";
  }
  return "?";
}

bool ValenceGraph::critical(std::size_t node) const {
  if (!valence(node).bivalent()) return false;
  bool any_exec = false;
  for (std::size_t e : out_edges.at(node)) {
    const ValenceEdge& edge = edges[e];
    if (edge.step.kind != Step::Kind::Exec) continue;
    any_exec = true;
    if (!valence(edge.to).monovalent()) return false;
  }
  return any_exec;
}

std::vector<std::size_t> ValenceGraph::critical_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (critical(i)) out.push_back(i);
  }
  return out;
}

Schedule ValenceGraph::witness(std::size_t node, Value v) const {
  if (!decisions.at(node).contains(v)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(v) + " is not decidable from node " + std::to_string(node));
  }
  Schedule s;
  std::size_t at = node;
  while (true) {
    const auto here = nodes[at].decisions();
    if (std::any_of(here.begin(), here.end(), [v](const auto& d) { return d.second == v; })) break;
    const auto& outs = out_edges[at];
    const auto next = std::find_if(outs.begin(), outs.end(), [&](std::size_t e) {
      return decisions[edges[e].to].contains(v);
    });
    if (next == outs.end()) throw Error(ErrorCode::Internal, "decision set has no witness");
    s.steps.push_back(edges[*next].step);
    at = edges[*next].to;
  }
  return s;
}

std::string ValenceGraph::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << 'n' << i << ' ' << valence(i).to_string();
    if (critical(i)) out << " critical";
    out << " | " << nodes[i].to_string() << '\n';
    for (std::size_t e : out_edges[i]) {
      out << "  " << edges[e].step.to_string() << " -> n" << edges[e].to << '\n';
    }
  }
  return out.str();
}

std::string ValenceGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph valence {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Valence v = valence(i);
    out << "  n" << i << " [label=\"n" << i << "\\n" << dot_escape(v.to_string()) << "\\n"
        << dot_escape(nodes[i].to_string()) << '"';
    if (critical(i)) {
      out << ", style=bold, color=red";
    } else if (v.bivalent()) {
      out << ", color=orange";
    }
    out << "];\n";
  }
  for (const ValenceEdge& e : edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.step.to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ValenceGraph valence_map(const Configuration& initial, const Protocol& protocol,
                         const ExploreOptions& options) {
  for (const auto& p : initial.processes) {
    if (protocol.ops_per_process(p.pid) > options.max_steps_per_process) {
      throw Error(ErrorCode::ExplorationBound,
                  "process " + std::to_string(p.pid) + " exceeds the step bound of " +
                      std::to_string(options.max_steps_per_process));
    }
  }

  ValenceGraph g;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> ids;
  auto intern = [&](Configuration cfg) -> std::size_t {
    const auto it = ids.find(cfg);
    if (it != ids.end()) return it->second;
    if (g.nodes.size() >= options.max_nodes) {
      throw Error(ErrorCode::ExplorationBound,
                  "configuration graph exceeds " + std::to_string(options.max_nodes) + " nodes");
    }
    const std::size_t id = g.nodes.size();
    ids.emplace(cfg, id);
    g.nodes.push_back(std::move(cfg));
    g.out_edges.emplace_back();
    return id;
  };

  intern(initial);
  for (std::size_t at = 0; at < g.nodes.size(); ++at) {
    std::vector<Step> moves;
    for (const auto& p : g.nodes[at].processes) {
      if (p.status != ProcessStatus::Running) continue;
      if (p.local.step >= options.max_steps_per_process) {
        throw Error(ErrorCode::ExplorationBound,
                    "process " + std::to_string(p.pid) + " exceeds the step bound");
      }
      moves.push_back(Step::exec(p.pid));
      if (options.crash_aware) moves.push_back(Step::crash(p.pid));
    }
    for (const Step& step : moves) {
      Configuration next = apply_step(protocol, g.nodes[at], step);
      const std::size_t to = intern(std::move(next));
      g.out_edges[at].push_back(g.edges.size());
      g.edges.push_back({at, to, step});
    }
  }

  // Successors always have strictly more progress than their predecessor.
  std::vector<std::size_t> order(g.nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.nodes[a].progress() > g.nodes[b].progress();
  });
  g.decisions.assign(g.nodes.size(), {});
  for (std::size_t id : order) {
    auto& set = g.decisions[id];
    for (const auto& [pid, v] : g.nodes[id].decisions()) set.insert(v);
    for (std::size_t e : g.out_edges[id]) {
      const auto& below = g.decisions[g.edges[e].to];
      set.insert(below.begin(), below.end());
    }
  }
  return g;
}

std::set<Value> reachable_decisions(const Configuration& cfg, const Protocol& protocol,
                                    bool crash_aware) {
  ExploreOptions options;
  options.crash_aware = crash_aware;
  return valence_map(cfg, protocol, options).decisions.front();
}

Valence classify(const Configuration& cfg, const Protocol& protocol, const ExploreOptions& options) {
  return valence_map(cfg, protocol, options).valence(0);
}

std::vector<CriticalConfig> find_critical(const Configuration& initial, const Protocol& protocol,
                                          const ExploreOptions& options) {
  const ValenceGraph g = valence_map(initial, protocol, options);
  std::vector<CriticalConfig> out;
  for (std::size_t id : g.critical_nodes()) {
    CriticalConfig c{g.nodes[id], {}};
    for (std::size_t e : g.out_edges[id]) {
      const ValenceEdge& edge = g.edges[e];
      if (edge.step.kind != Step::Kind::Exec) continue;
      c.successors.emplace(edge.step.pid, std::make_pair(g.nodes[edge.to], g.valence(edge.to)));
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool check_commutation(const Protocol& protocol, const Configuration& cfg, ProcessId a, ProcessId b) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "commutation needs two distinct processes");
  if (!pending_op(protocol, cfg, a) || !pending_op(protocol, cfg, b)) {
    throw Error(ErrorCode::InvalidArgument, "both processes need a pending operation");
  }
  const Configuration ab = apply_step(protocol, apply_step(protocol, cfg, Step::exec(a)), Step::exec(b));
  const Configuration ba = apply_step(protocol, apply_step(protocol, cfg, Step::exec(b)), Step::exec(a));
  return ab == ba;
}

}  // namespace kslide
