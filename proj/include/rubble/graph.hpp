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
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rubble/error.hpp"

namespace rubble {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple connected undirected graph on vertices 0..n-1. Immutable once
// built; labels are only for display and file round-trips.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n == 0) throw Error("graph must have at least one vertex");
    if (!labels_.empty() && labels_.size() != n)
      throw Error("label table size does not match vertex count");
    adjacency_matrix_.assign(n * n, 0);
    adjacency_.resize(n);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        throw Error("edge {" + std::to_string(a) + "," + std::to_string(b) +
                    "} has an endpoint out of range");
      if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
      if (adjacency_matrix_[a * n + b])
        throw Error("duplicate edge {" + std::to_string(a) + "," +
                    std::to_string(b) + "}");
      adjacency_matrix_[a * n + b] = adjacency_matrix_[b * n + a] = 1;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    std::sort(edges_.begin(), edges_.end());
    if (!connected()) throw Error("graph is not connected");
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex a, Vertex b) const {
    return a < n_ && b < n_ && adjacency_matrix_[a * n_ + b] != 0;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Label if present, otherwise the decimal index.
  std::string name(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adjacency_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == n_;
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> adjacency_matrix_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Families

enum class Family { Path, Cycle, Ladder, Prism, Mobius, H };

struct FamilySpec {
  Family family;
  unsigned n;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Ladder: return "ladder";
    case Family::Prism: return "prism";
    case Family::Mobius: return "mobius";
    case Family::H: return "h";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Ladder, Family::Prism,
                   Family::Mobius, Family::H}) {
    if (family_name(f) == name) return f;
  }
  throw Error("unknown family '" + std::string(name) + "'");
}

inline unsigned min_parameter(Family f) {
  switch (f) {
    case Family::Cycle:
    case Family::Prism:
    case Family::Mobius: return 3;
    default: return 1;
  }
}

inline std::string to_string(const FamilySpec& spec) {
  return std::string(family_name(spec.family)) + ":" + std::to_string(spec.n);
}

// "ladder:5" -> {Ladder, 5}
inline FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error("family spec must look like 'name:n', got '" +
                std::string(text) + "'");
  FamilySpec spec{parse_family(text.substr(0, colon)), 0};
  auto digits = text.substr(colon + 1);
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("bad family parameter in '" + std::string(text) + "'");
  spec.n = static_cast<unsigned>(std::stoul(std::string(digits)));
  return spec;
}

namespace detail {

inline void check_parameter(const FamilySpec& spec) {
  if (spec.n < min_parameter(spec.family))
    throw Error("parameter out of bounds for " + to_string(spec) +
                " (minimum " + std::to_string(min_parameter(spec.family)) +
                ")");
}

// Ladder coordinates: v_ix -> i-1, v_iy -> n+i-1 (columns are 1-based).
inline std::vector<std::string> ladder_labels(unsigned n) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i) + "x");
  for (unsigned i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i) + "y");
  return labels;
}

inline std::vector<Edge> ladder_edges(unsigned n) {
  std::vector<Edge> edges;
  for (unsigned i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(n + i, n + i + 1);
  }
  for (unsigned i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return edges;
}

}  // namespace detail

// Canonical labelling: Path/Cycle use v1..vn at indices 0..n-1. Two-row
// families put v_ix at i-1 and v_iy at n+i-1. H n keeps the ladder
// coordinates of Ladder n+1 with v_{n+1}x removed, so it has x-row indices
// 0..n-1 and y-row indices n..2n.
inline Graph build_family(const FamilySpec& spec) {
  detail::check_parameter(spec);
  const unsigned n = spec.n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  switch (spec.family) {
    case Family::Path:
    case Family::Cycle:
      for (unsigned i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
      for (unsigned i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (spec.family == Family::Cycle) edges.emplace_back(n - 1, 0);
      break;
    case Family::Ladder:
      edges = detail::ladder_edges(n);
      labels = detail::ladder_labels(n);
      break;
    case Family::Prism:
      edges = detail::ladder_edges(n);
      labels = detail::ladder_labels(n);
      edges.emplace_back(n - 1, 0);
      edges.emplace_back(2 * n - 1, n);
      break;
    case Family::Mobius:
      edges = detail::ladder_edges(n);
      labels = detail::ladder_labels(n);
      edges.emplace_back(n - 1, n);      // v_nx - v_1y
      edges.emplace_back(2 * n - 1, 0);  // v_ny - v_1x
      break;
    case Family::H: {
      // Ladder n+1 without v_{n+1}x, renumbered.
      const unsigned full = n + 1;
      auto remap = [&](Vertex v) -> Vertex { return v < n ? v : v - 1; };
      for (auto [a, b] : detail::ladder_edges(full)) {
        if (a == n || b == n) continue;
        edges.emplace_back(remap(a), remap(b));
      }
      for (unsigned i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i) + "x");
      for (unsigned i = 1; i <= full; ++i) labels.push_back("v" + std::to_string(i) + "y");
      break;
    }
  }
  const std::size_t order = labels.size();
  return Graph(order, std::move(edges), std::move(labels));
}

// Vertex (a, x) of G x H gets index a + |G| * x, so P_n x P_2 lines up with
// the ladder numbering above.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  auto index = [ng](std::size_t a, std::size_t x) {
    return static_cast<Vertex>(a + ng * x);
  };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < nh; ++x)
    for (auto [a, b] : g.edges()) edges.emplace_back(index(a, x), index(b, x));
  for (std::size_t a = 0; a < ng; ++a)
    for (auto [x, y] : h.edges()) edges.emplace_back(index(a, x), index(a, y));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t a = 0; a < ng; ++a)
      labels.push_back("(" + g.name(static_cast<Vertex>(a)) + "," +
                       h.name(static_cast<Vertex>(x)) + ")");
  return Graph(ng * nh, std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------------------
// Quotients

class QuotientMap {
 public:
  // Blocks must be nonempty, disjoint and cover 0..n-1.
  static QuotientMap from_blocks(std::size_t n,
                                 std::vector<std::vector<Vertex>> blocks) {
    constexpr Vertex unset = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> phi(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw Error("empty block in partition");
      for (Vertex v : blocks[b]) {
        if (v >= n) throw Error("partition mentions vertex " + std::to_string(v) +
                                " outside the graph");
        if (phi[v] != unset)
          throw Error("vertex " + std::to_string(v) + " appears in two blocks");
        phi[v] = static_cast<Vertex>(b);
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (phi[v] == unset)
        throw Error("vertex " + std::to_string(v) + " is not covered by the partition");
    QuotientMap q;
    q.blocks_ = std::move(blocks);
    q.phi_ = std::move(phi);
    return q;
  }

  static QuotientMap identity(std::size_t n) {
    std::vector<std::vector<Vertex>> blocks(n);
    for (std::size_t v = 0; v < n; ++v) blocks[v] = {static_cast<Vertex>(v)};
    return from_blocks(n, std::move(blocks));
  }

  std::size_t source_order() const noexcept { return phi_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  Vertex operator()(Vertex v) const { return phi_.at(v); }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<Vertex> phi_;
};

inline Graph quotient(const Graph& g, const QuotientMap& q) {
  if (q.source_order() != g.order())
    throw Error("partition size does not match the graph");
  const std::size_t k = q.block_count();
  std::vector<char> seen(k * k, 0);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex qa = q(a), qb = q(b);
    if (qa == qb) continue;
    if (qa > qb) std::swap(qa, qb);
    if (!seen[qa * k + qb]) {
      seen[qa * k + qb] = 1;
      edges.emplace_back(qa, qb);
    }
  }
  std::vector<std::string> labels;
  for (const auto& block : q.blocks()) {
    if (block.size() == 1) {
      labels.push_back(g.name(block.front()));
      continue;
    }
    std::string label = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) label += ",";
      label += g.name(block[i]);
    }
    labels.push_back(label + "}");
  }
  try {
    return Graph(k, std::move(edges), std::move(labels));
  } catch (const Error& e) {
    throw Error(std::string("quotient is not a valid graph: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Distances

class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.order()), d_(n_ * n_, 0) {
    std::vector<Vertex> queue(n_);
    std::vector<char> seen(n_);
    for (Vertex s = 0; s < n_; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      seen[s] = 1;
      while (head < tail) {
        Vertex v = queue[head++];
        for (Vertex u : g.neighbors(v)) {
          if (!seen[u]) {
            seen[u] = 1;
            d_[s * n_ + u] = d_[s * n_ + v] + 1;
            queue[tail++] = u;
          }
        }
      }
    }
  }

  unsigned operator()(Vertex a, Vertex b) const { return d_[a * n_ + b]; }

  unsigned eccentricity(Vertex v) const {
    return *std::max_element(d_.begin() + v * n_, d_.begin() + (v + 1) * n_);
  }

  unsigned diameter() const { return *std::max_element(d_.begin(), d_.end()); }

  std::size_t order() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<unsigned> d_;
};

inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

// ---------------------------------------------------------------------------
// Symmetry

// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline bool is_automorphism(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.order()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex image : perm) {
    if (image >= perm.size() || hit[image]) return false;
    hit[image] = 1;
  }
  for (auto [a, b] : g.edges())
    if (!g.adjacent(perm[a], perm[b])) return false;
  return true;
}

// A generating set for a subgroup of Aut(G) built from the family structure.
// Every entry is checked against the edge set; a failure is a table bug.
inline std::vector<Permutation> automorphism_generators(const FamilySpec& spec) {
  const Graph g = build_family(spec);
  const unsigned n = spec.n;
  const std::size_t order = g.order();
  std::vector<Permutation> gens;
  auto make = [&](auto image_of) {
    Permutation p(order);
    for (Vertex v = 0; v < order; ++v) p[v] = image_of(v);
    gens.push_back(std::move(p));
  };
  // Two-row helpers: column c (0-based) and row r (0 = x, 1 = y).
  auto at = [n](unsigned c, unsigned r) -> Vertex { return r * n + c; };

  switch (spec.family) {
    case Family::Path:
      make([&](Vertex v) { return n - 1 - v; });
      break;
    case Family::Cycle:
      make([&](Vertex v) { return (v + 1) % n; });
      make([&](Vertex v) { return (n - v) % n; });
      break;
    case Family::Ladder:
      make([&](Vertex v) { return at(n - 1 - v % n, v / n); });
      make([&](Vertex v) { return at(v % n, 1 - v / n); });
      break;
    case Family::Prism:
      make([&](Vertex v) { return at((v % n + 1) % n, v / n); });
      make([&](Vertex v) { return at(v % n, 1 - v / n); });
      make([&](Vertex v) { return at((n - v % n) % n, v / n); });
      break;
    case Family::Mobius:
      // The outer 2n-cycle runs v1x..vnx v1y..vny, i.e. indices 0..2n-1 in
      // order, and rungs join antipodes; rotating it is an automorphism.
      make([&](Vertex v) { return (v + 1) % (2 * n); });
      make([&](Vertex v) { return (v + n) % (2 * n); });
      break;
    case Family::H:
      make([](Vertex v) { return v; });
      break;
  }
  for (const auto& p : gens)
    if (!is_automorphism(g, p))
      throw InternalError("automorphism table entry for " + to_string(spec) +
                          " does not preserve edges");
  return gens;
}

}  // namespace rubble
