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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rubble/certificate.hpp"
#include "rubble/distribution.hpp"
#include "rubble/error.hpp"
#include "rubble/graph.hpp"

namespace rubble {

struct Query {
  Distribution dist;
  Vertex root = 0;
  unsigned t = 1;
  MoveSystem mode = MoveSystem::Rubbling;
  std::vector<Vertex> forbidden_strict_targets;
  // Off only for cross-checking; decisions must not change.
  bool weight_pruning = true;
};

struct Decision {
  bool reachable = false;
  std::optional<Certificate> certificate;
  std::uint64_t states_explored = 0;
};

namespace detail {

// A move shape plus the scaled weight it costs relative to one root.
struct MoveTemplate {
  Move move;
  std::uint64_t loss;
};

struct PackedKey {
  unsigned bits;
  std::uint64_t operator()(const std::vector<std::uint8_t>& counts) const {
    std::uint64_t key = 0;
    for (std::uint8_t c : counts) key = (key << bits) | c;
    return key;
  }
};

struct ByteKey {
  std::string operator()(const std::vector<std::uint8_t>& counts) const {
    return std::string(counts.begin(), counts.end());
  }
};

// Depth-first search over distributions. `failed` holds every state already
// expanded without success; legality and the goal depend on the state alone,
// and every move shrinks the total, so a state never needs a second visit.
template <class Encode>
class Search {
 public:
  using Key = decltype(std::declval<Encode>()(std::declval<const std::vector<std::uint8_t>&>()));

  Search(const std::vector<MoveTemplate>& templates, std::vector<std::uint8_t> counts,
         Vertex root, unsigned t, std::uint64_t weight, std::uint64_t threshold, bool prune,
         Encode encode)
      : templates_(templates),
        counts_(std::move(counts)),
        root_(root),
        t_(t),
        weight_(weight),
        threshold_(threshold),
        prune_(prune),
        encode_(encode) {}

  bool run() { return dfs(); }
  std::vector<Move> take_path() { return std::move(path_); }
  std::uint64_t explored() const { return failed_.size(); }

 private:
  bool dfs() {
    if (counts_[root_] >= t_) return true;
    if (prune_ && weight_ < threshold_) return false;
    if (!failed_.insert(encode_(counts_)).second) return false;
    for (const MoveTemplate& tpl : templates_) {
      const Move& m = tpl.move;
      if (m.kind == MoveKind::Pebbling) {
        if (counts_[m.first] < 2) continue;
      } else if (counts_[m.first] == 0 || counts_[m.second] == 0) {
        continue;
      }
      if (prune_ && weight_ - tpl.loss < threshold_) continue;
      --counts_[m.first];
      --counts_[m.second];
      ++counts_[m.target];
      weight_ -= tpl.loss;
      path_.push_back(m);
      if (dfs()) return true;
      path_.pop_back();
      weight_ += tpl.loss;
      --counts_[m.target];
      ++counts_[m.second];
      ++counts_[m.first];
    }
    return false;
  }

  const std::vector<MoveTemplate>& templates_;
  std::vector<std::uint8_t> counts_;
  Vertex root_;
  unsigned t_;
  std::uint64_t weight_;
  std::uint64_t threshold_;
  bool prune_;
  Encode encode_;
  std::vector<Move> path_;
  std::unordered_set<Key> failed_;
};

}  // namespace detail

// Exact t-reachability. Holds per-root move orderings, so one instance
// should stay on one thread; queries themselves share nothing.
class Solver {
 public:
  explicit Solver(Graph g) : graph_(std::move(g)), dist_(graph_) {
    const auto n = graph_.order();
    coef_.assign(n * n, 0);
    for (Vertex r = 0; r < n; ++r) {
      const unsigned ecc = dist_.eccentricity(r);
      if (ecc > 56) {
        prunable_.push_back(0);
        continue;
      }
      prunable_.push_back(1);
      for (Vertex v = 0; v < n; ++v)
        coef_[r * n + v] = std::uint64_t{1} << (ecc - dist_(v, r));
    }
    cache_.resize(2 * n);
  }

  const Graph& graph() const noexcept { return graph_; }
  const DistanceTable& distance_table() const noexcept { return dist_; }

  Decision reachable(const Query& q) {
    validate(q);
    const auto n = graph_.order();
    Decision out;
    if (q.dist[q.root] >= q.t) {
      out.reachable = true;
      out.certificate = Certificate{q.dist, {}, q.root, q.t};
      return out;
    }
    if (q.dist.size() > 255)
      throw Error("solver supports at most 255 pebbles per query");
    const bool prune = q.weight_pruning && prunable_[q.root];
    std::uint64_t weight = 0, threshold = 0;
    if (prunable_[q.root]) {
      for (Vertex v = 0; v < n; ++v) {
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(std::uint64_t{q.dist[v]}, coef_[q.root * n + v], &term) ||
            __builtin_add_overflow(weight, term, &weight))
          throw Error("weight overflow");
      }
      if (__builtin_mul_overflow(std::uint64_t{q.t},
                                 std::uint64_t{1} << dist_.eccentricity(q.root), &threshold))
        throw Error("weight overflow");
      if (q.weight_pruning && weight < threshold) return out;
    }

    std::vector<MoveTemplate> local;
    const auto* templates = &local;
    if (q.forbidden_strict_targets.empty()) {
      auto& slot = cache_[2 * q.root + (q.mode == MoveSystem::Rubbling)];
      if (slot.empty()) slot = build_templates(q.root, q.mode, {});
      templates = &slot;
    } else {
      local = build_templates(q.root, q.mode, q.forbidden_strict_targets);
    }

    std::vector<std::uint8_t> counts(n);
    for (Vertex v = 0; v < n; ++v) counts[v] = static_cast<std::uint8_t>(q.dist[v]);
    const unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(static_cast<unsigned>(q.dist.size()))));
    auto finish = [&](auto& search) {
      out.reachable = search.run();
      out.states_explored = search.explored();
      if (out.reachable) out.certificate = Certificate{q.dist, search.take_path(), q.root, q.t};
    };
    if (n * bits <= 64) {
      detail::Search search(*templates, std::move(counts), q.root, q.t, weight, threshold, prune,
                            detail::PackedKey{bits});
      finish(search);
    } else {
      detail::Search search(*templates, std::move(counts), q.root, q.t, weight, threshold, prune,
                            detail::ByteKey{});
      finish(search);
    }
    return out;
  }

  bool is_reachable(const Distribution& d, Vertex root, unsigned t, MoveSystem mode) {
    return reachable(Query{d, root, t, mode, {}, true}).reachable;
  }

  // Smallest root that cannot collect t pebbles, if any. Cheap weight test
  // first over all roots, then full searches in index order.
  std::optional<Vertex> first_unsolved_root(const Distribution& d, MoveSystem mode,
                                            unsigned t = 1) {
    const auto n = graph_.order();
    std::optional<Vertex> light;
    for (Vertex r = 0; r < n && !light; ++r) {
      if (!prunable_[r] || d[r] >= t) continue;
      std::uint64_t w = 0;
      for (Vertex v = 0; v < n; ++v) w += std::uint64_t{d[v]} * coef_[r * n + v];
      if (w < (std::uint64_t{t} << dist_.eccentricity(r))) light = r;
    }
    const Vertex limit = light ? *light : static_cast<Vertex>(n);
    for (Vertex r = 0; r < limit; ++r)
      if (!is_reachable(d, r, t, mode)) return r;
    return light;
  }

  bool solvable(const Distribution& d, MoveSystem mode, unsigned t = 1) {
    return !first_unsolved_root(d, mode, t).has_value();
  }

 private:
  void validate(const Query& q) const {
    if (q.t < 1) throw Error("t must be at least 1");
    if (q.root >= graph_.order()) throw Error("root out of range");
    if (q.dist.order() != graph_.order())
      throw Error("distribution has " + std::to_string(q.dist.order()) +
                  " entries, graph has " + std::to_string(graph_.order()) + " vertices");
    for (Vertex v : q.forbidden_strict_targets)
      if (v >= graph_.order()) throw Error("forbidden target out of range");
  }

  // Ordered by target distance to the root, then pebbling before strict
  // rubbling; the order only steers which certificate is found first.
  std::vector<detail::MoveTemplate> build_templates(Vertex root, MoveSystem mode,
                                                    const std::vector<Vertex>& forbidden) const {
    const auto n = graph_.order();
    auto c = [&](Vertex v) { return coef_[root * n + v]; };
    std::vector<detail::MoveTemplate> out;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : graph_.neighbors(v)) out.push_back({Move::pebbling(v, u), 2 * c(v) - c(u)});
    if (mode == MoveSystem::Rubbling) {
      for (Vertex u = 0; u < n; ++u) {
        if (std::find(forbidden.begin(), forbidden.end(), u) != forbidden.end()) continue;
        auto nb = graph_.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j)
            out.push_back({Move::strict(nb[i], nb[j], u), c(nb[i]) + c(nb[j]) - c(u)});
      }
    }
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      auto key = [&](const detail::MoveTemplate& m) {
        return std::tuple(dist_(m.move.target, root), m.move.kind, m.loss, m.move);
      };
      return key(a) < key(b);
    });
    return out;
  }

  using MoveTemplate = detail::MoveTemplate;

  Graph graph_;
  DistanceTable dist_;
  std::vector<std::uint64_t> coef_;  // coef_[r*n+v] = 2^(ecc(r) - dist(v,r))
  std::vector<char> prunable_;
  std::vector<std::vector<MoveTemplate>> cache_;
};

inline Decision reachable(const Graph& g, const Query& q) { return Solver(g).reachable(q); }

// 1-reachable from every root.
inline bool solvable(const Graph& g, const Distribution& d, MoveSystem mode) {
  return Solver(g).solvable(d, mode);
}

// ---------------------------------------------------------------------------
// Acyclic search

inline constexpr std::size_t kAcyclicMaxVertices = 8;
inline constexpr std::uint64_t kAcyclicMaxPebbles = 6;

// Search restricted to move sequences whose transition digraph stays acyclic.
// No weight pruning, so it doubles as an independent route to the decision.
inline bool acyclic_reachable(const Graph& g, const Query& q) {
  const auto n = g.order();
  if (n > kAcyclicMaxVertices || q.dist.size() > kAcyclicMaxPebbles)
    throw Error("acyclic search is limited to " + std::to_string(kAcyclicMaxVertices) +
                " vertices and " + std::to_string(kAcyclicMaxPebbles) + " pebbles");
  if (q.t < 1 || q.root >= n || q.dist.order() != n) throw Error("malformed query");

  std::vector<int> arc(n * n, -1);
  int arcs = 0;
  for (auto [a, b] : g.edges()) {
    arc[a * n + b] = arcs++;
    arc[b * n + a] = arcs++;
  }
  std::vector<Move> moves;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) moves.push_back(Move::pebbling(v, u));
  if (q.mode == MoveSystem::Rubbling) {
    for (Vertex u = 0; u < n; ++u) {
      if (std::find(q.forbidden_strict_targets.begin(), q.forbidden_strict_targets.end(), u) !=
          q.forbidden_strict_targets.end())
        continue;
      auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) moves.push_back(Move::strict(nb[i], nb[j], u));
    }
  }

  auto reaches = [&](std::uint64_t mask, Vertex from, Vertex to) {
    std::uint32_t seen = 1u << from;
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (Vertex u : g.neighbors(v)) {
        if ((mask >> arc[v * n + u]) & 1 && !(seen >> u & 1)) {
          seen |= 1u << u;
          stack.push_back(u);
        }
      }
    }
    return false;
  };

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, KeyHash> visited;
  std::vector<std::uint8_t> counts(n);
  for (Vertex v = 0; v < n; ++v) counts[v] = static_cast<std::uint8_t>(q.dist[v]);

  auto dfs = [&](auto& self, std::uint64_t mask) -> bool {
    if (counts[q.root] >= q.t) return true;
    std::uint64_t packed = 0;
    for (auto c : counts) packed = (packed << 3) | c;
    if (!visited.insert({packed, mask}).second) return false;
    for (const Move& m : moves) {
      if (m.kind == MoveKind::Pebbling ? counts[m.first] < 2
                                       : (counts[m.first] == 0 || counts[m.second] == 0))
        continue;
      if (reaches(mask, m.target, m.first) || reaches(mask, m.target, m.second)) continue;
      std::uint64_t next = mask | (std::uint64_t{1} << arc[m.first * n + m.target]) |
                           (std::uint64_t{1} << arc[m.second * n + m.target]);
      --counts[m.first];
      --counts[m.second];
      ++counts[m.target];
      bool ok = self(self, next);
      --counts[m.target];
      ++counts[m.second];
      ++counts[m.first];
      if (ok) return true;
    }
    return false;
  };
  return dfs(dfs, 0);
}

// ---------------------------------------------------------------------------
// Threads

// Throws unless `thread` is empty or a set of degree-2 vertices inducing a path.
inline void validate_thread(const Graph& g, const std::vector<Vertex>& thread) {
  if (thread.empty()) return;
  std::vector<char> in(g.order(), 0);
  for (Vertex v : thread) {
    if (v >= g.order()) throw Error("thread vertex out of range");
    if (in[v]) throw Error("thread repeats vertex " + g.name(v));
    if (g.degree(v) != 2) throw Error("thread vertex " + g.name(v) + " does not have degree 2");
    in[v] = 1;
  }
  std::size_t inner_edges = 0;
  for (auto [a, b] : g.edges()) inner_edges += in[a] && in[b];
  std::vector<Vertex> stack{thread.front()};
  std::vector<char> seen(g.order(), 0);
  seen[thread.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  if (count != thread.size() || inner_edges != thread.size() - 1)
    throw Error("thread does not induce a path");
}

// Reachability of x with strict rubbling into the thread disabled. Callers
// compare against the unrestricted decision.
inline bool thread_restricted_equivalence(Solver& solver, const std::vector<Vertex>& thread,
                                          const Distribution& d, Vertex x) {
  validate_thread(solver.graph(), thread);
  if (std::find(thread.begin(), thread.end(), x) != thread.end())
    throw Error("target vertex lies on the thread");
  return solver.reachable(Query{d, x, 1, MoveSystem::Rubbling, thread, true}).reachable;
}

inline bool thread_restricted_equivalence(const Graph& g, const std::vector<Vertex>& thread,
                                          const Distribution& d, Vertex x) {
  Solver solver(g);
  return thread_restricted_equivalence(solver, thread, d, x);
}

}  // namespace rubble
