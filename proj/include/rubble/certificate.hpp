// Copyright 2026 The rubble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rubble/distribution.hpp"
#include "rubble/graph.hpp"

namespace rubble {

// A self-contained witness that `t` pebbles reach `root` from `initial`.
struct Certificate {
  Distribution initial;
  std::vector<Move> moves;
  Vertex root = 0;
  unsigned t = 1;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Directed multigraph with the two source->target arcs of every move; a
// pebbling move contributes its arc twice.
class TransitionDigraph {
 public:
  TransitionDigraph(std::size_t n, const std::vector<Move>& moves) : n_(n) {
    for (const Move& m : moves) {
      ++arcs_[{m.first, m.target}];
      ++arcs_[{m.second, m.target}];
    }
  }

  std::size_t multiplicity(Vertex from, Vertex to) const {
    auto it = arcs_.find({from, to});
    return it == arcs_.end() ? 0 : it->second;
  }

  std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto& [arc, k] : arcs_) total += k;
    return total;
  }

  bool has_cycle() const {
    std::vector<std::vector<Vertex>> out(n_);
    for (const auto& [arc, k] : arcs_) {
      if (arc.first >= n_ || arc.second >= n_) continue;
      out[arc.first].push_back(arc.second);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> state(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (state[s]) continue;
      std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
      state[s] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < out[v].size()) {
          Vertex u = out[v][next++];
          if (state[u] == 1) return true;
          if (state[u] == 0) {
            state[u] = 1;
            stack.emplace_back(u, 0);
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
    return false;
  }

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> arcs_;
};

struct CertificateReport {
  bool valid = false;
  bool acyclic = false;
  std::optional<std::size_t> first_illegal_move;  // index into moves
  std::string reason;                             // empty when valid
  Count final_root_count = 0;
};

// valid: every move legal in turn under `mode` and the final root count is
// at least t. acyclic: the transition digraph of all moves has no cycle.
inline CertificateReport verify_certificate(const Graph& g, const Certificate& c,
                                            MoveSystem mode = MoveSystem::Rubbling) {
  CertificateReport report;
  report.acyclic = !TransitionDigraph(g.order(), c.moves).has_cycle();
  if (c.initial.order() != g.order()) {
    report.reason = "initial distribution has " + std::to_string(c.initial.order()) +
                    " entries, graph has " + std::to_string(g.order()) + " vertices";
    return report;
  }
  if (c.root >= g.order()) {
    report.reason = "root out of range";
    return report;
  }
  Distribution cur = c.initial;
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const Move& m = c.moves[i];
    std::string why = move_violation(g, cur, m);
    if (why.empty() && mode == MoveSystem::PebblingOnly && m.kind == MoveKind::StrictRubbling)
      why = "strict rubbling move not allowed under pebbling";
    if (!why.empty()) {
      report.first_illegal_move = i;
      report.reason = "move " + std::to_string(i) + " " + to_string(m) + ": " + why;
      report.final_root_count = cur[c.root];
      return report;
    }
    cur = apply_move(g, cur, m);
  }
  report.final_root_count = cur[c.root];
  if (cur[c.root] < c.t) {
    report.reason = "root ends with " + std::to_string(cur[c.root]) + " pebble(s), needs " +
                    std::to_string(c.t);
    return report;
  }
  report.valid = true;
  return report;
}

}  // namespace rubble
