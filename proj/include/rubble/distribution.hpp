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
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rubble/error.hpp"
#include "rubble/graph.hpp"

namespace rubble {

using Count = std::uint32_t;

// Pebble counts per vertex with a cached total.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::size_t n) : counts_(n, 0) {}
  explicit Distribution(std::vector<Count> counts)
      : counts_(std::move(counts)),
        size_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}
  Distribution(std::initializer_list<Count> counts)
      : Distribution(std::vector<Count>(counts)) {}

  std::size_t order() const noexcept { return counts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  Count operator[](Vertex v) const { return counts_[v]; }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  void add(Vertex v, Count k = 1) {
    counts_.at(v) += k;
    size_ += k;
  }

  void remove(Vertex v, Count k = 1) {
    if (counts_.at(v) < k)
      throw Error("cannot remove " + std::to_string(k) + " pebble(s) from vertex " +
                  std::to_string(v) + " holding " + std::to_string(counts_[v]));
    counts_[v] -= k;
    size_ -= k;
  }

  // Pointwise domination.
  bool contains(const Distribution& other) const {
    if (other.order() != order()) return false;
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] < other.counts_[v]) return false;
    return true;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.counts_ == b.counts_;
  }
  friend auto operator<=>(const Distribution& a, const Distribution& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<Count> counts_;
  std::uint64_t size_ = 0;
};

inline std::string to_string(const Distribution& d) {
  std::string out = "(";
  for (std::size_t v = 0; v < d.order(); ++v) {
    if (v) out += ",";
    out += std::to_string(d[static_cast<Vertex>(v)]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Moves

enum class MoveSystem { PebblingOnly, Rubbling };
enum class MoveKind { Pebbling, StrictRubbling };

inline std::string_view to_string(MoveSystem m) {
  return m == MoveSystem::PebblingOnly ? "pebbling" : "rubbling";
}

inline MoveSystem parse_move_system(std::string_view s) {
  if (s == "pebbling") return MoveSystem::PebblingOnly;
  if (s == "rubbling") return MoveSystem::Rubbling;
  throw Error("unknown move system '" + std::string(s) + "'");
}

// (v,v->u) or (v,w->u). Strict rubbling sources are stored in ascending order.
struct Move {
  MoveKind kind;
  Vertex first;
  Vertex second;
  Vertex target;

  static Move pebbling(Vertex source, Vertex target) {
    return {MoveKind::Pebbling, source, source, target};
  }
  static Move strict(Vertex a, Vertex b, Vertex target) {
    return {MoveKind::StrictRubbling, std::min(a, b), std::max(a, b), target};
  }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m, const Graph* g = nullptr) {
  auto name = [g](Vertex v) { return g ? g->name(v) : std::to_string(v); };
  return "(" + name(m.first) + "," + name(m.second) + "->" + name(m.target) + ")";
}

// Every legal move under `mode`. Strict rubbling moves into a vertex listed
// in `forbidden_strict_targets` are left out; pebbling moves are unaffected.
inline std::vector<Move> legal_moves(const Graph& g, const Distribution& d,
                                     MoveSystem mode,
                                     const std::vector<Vertex>& forbidden_strict_targets = {}) {
  std::vector<Move> moves;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v = 0; v < n; ++v) {
    if (d[v] < 2) continue;
    for (Vertex u : g.neighbors(v)) moves.push_back(Move::pebbling(v, u));
  }
  if (mode == MoveSystem::Rubbling) {
    for (Vertex u = 0; u < n; ++u) {
      if (std::find(forbidden_strict_targets.begin(), forbidden_strict_targets.end(), u) !=
          forbidden_strict_targets.end())
        continue;
      auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (d[nb[i]] == 0) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (d[nb[j]] > 0) moves.push_back(Move::strict(nb[i], nb[j], u));
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

// Returns an empty string when `m` is legal in `d`, otherwise the reason.
inline std::string move_violation(const Graph& g, const Distribution& d, const Move& m) {
  const auto n = g.order();
  if (m.first >= n || m.second >= n || m.target >= n) return "vertex out of range";
  if (m.kind == MoveKind::Pebbling) {
    if (m.first != m.second) return "pebbling move must have a single source";
    if (!g.adjacent(m.first, m.target)) return "source is not adjacent to target";
    if (d[m.first] < 2) return "source holds fewer than 2 pebbles";
    return {};
  }
  if (m.first == m.second) return "strict rubbling move needs two distinct sources";
  if (!g.adjacent(m.first, m.target) || !g.adjacent(m.second, m.target))
    return "a source is not adjacent to target";
  if (d[m.first] < 1 || d[m.second] < 1) return "a source holds no pebble";
  return {};
}

inline Distribution apply_move(const Graph& g, const Distribution& d, const Move& m) {
  if (auto why = move_violation(g, d, m); !why.empty())
    throw Error("illegal move " + to_string(m) + ": " + why);
  Distribution out = d;
  if (m.kind == MoveKind::Pebbling) {
    out.remove(m.first, 2);
  } else {
    out.remove(m.first);
    out.remove(m.second);
  }
  out.add(m.target);
  return out;
}

// ---------------------------------------------------------------------------
// Smoothing

inline Distribution smoothing_move(const Graph& g, const Distribution& d, Vertex v) {
  if (v >= g.order()) throw Error("vertex out of range");
  if (g.degree(v) != 2)
    throw Error("smoothing needs a degree-2 vertex; vertex " + g.name(v) + " has degree " +
                std::to_string(g.degree(v)));
  if (d[v] < 3)
    throw Error("smoothing needs at least 3 pebbles on " + g.name(v));
  Distribution out = d;
  out.remove(v, 2);
  for (Vertex u : g.neighbors(v)) out.add(u);
  return out;
}

inline bool is_smooth(const Graph& g, const Distribution& d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2 && d[v] > 2) return false;
  return true;
}

// Smooths at the lowest-index eligible vertex until none remains. Smoothing
// can cycle forever (every vertex of a cycle has degree 2, so more than 2n
// pebbles can never be smooth), so iterations are capped at size * n^2.
inline Distribution smooth_fully(const Graph& g, const Distribution& d) {
  const std::uint64_t n = g.order();
  const std::uint64_t cap = std::max<std::uint64_t>(1, d.size()) * n * n;
  Distribution cur = d;
  for (std::uint64_t step = 0;; ++step) {
    Vertex pick = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 2 && cur[v] >= 3) {
        pick = v;
        break;
      }
    }
    if (pick == n) return cur;
    if (step >= cap)
      throw InternalError("smoothing did not terminate within " + std::to_string(cap) +
                          " moves from " + to_string(d));
    cur = smoothing_move(g, cur, pick);
  }
}

inline Distribution quotient_distribution(const Distribution& d, const QuotientMap& q) {
  if (d.order() != q.source_order())
    throw Error("distribution does not match the partition");
  std::vector<Count> counts(q.block_count(), 0);
  for (Vertex v = 0; v < d.order(); ++v) counts[q(v)] += d[v];
  return Distribution(std::move(counts));
}

// ---------------------------------------------------------------------------
// Weight

// numerator / 2^exponent, kept reduced.
struct Dyadic {
  std::uint64_t numerator = 0;
  unsigned exponent = 0;

  static Dyadic make(std::uint64_t num, unsigned exp) {
    while (exp > 0 && num % 2 == 0) {
      num /= 2;
      --exp;
    }
    if (num == 0) exp = 0;
    return {num, exp};
  }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    // Compare a.num * 2^b.exp with b.num * 2^a.exp without overflow.
    unsigned __int128 lhs = a.numerator, rhs = b.numerator;
    unsigned ea = a.exponent, eb = b.exponent;
    unsigned shift = std::min(ea, eb);
    ea -= shift;
    eb -= shift;
    if (eb) lhs <<= eb;
    if (ea) rhs <<= ea;
    return lhs <=> rhs;
  }
  friend bool operator==(const Dyadic& a, std::uint64_t k) { return a == make(k, 0); }
  friend auto operator<=>(const Dyadic& a, std::uint64_t k) { return a <=> make(k, 0); }
};

inline std::string to_string(const Dyadic& w) {
  if (w.exponent == 0) return std::to_string(w.numerator);
  return std::to_string(w.numerator) + "/" + std::to_string(std::uint64_t{1} << w.exponent);
}

namespace detail {

inline std::uint64_t checked_weight_numerator(const DistanceTable& dist, const Distribution& d,
                                              Vertex root, unsigned exponent) {
  std::uint64_t num = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d[v] == 0) continue;
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(std::uint64_t{d[v]},
                               std::uint64_t{1} << (exponent - dist(v, root)), &term) ||
        __builtin_add_overflow(num, term, &num))
      throw Error("weight numerator overflows 64 bits");
  }
  return num;
}

}  // namespace detail

// Sum of d(v) * 2^-dist(v, root), exact.
inline Dyadic weight(const DistanceTable& dist, const Distribution& d, Vertex root) {
  const unsigned ecc = dist.eccentricity(root);
  if (ecc > 62) throw Error("eccentricity too large for exact weights");
  return Dyadic::make(detail::checked_weight_numerator(dist, d, root, ecc), ecc);
}

inline Dyadic weight(const Graph& g, const Distribution& d, Vertex root) {
  return weight(DistanceTable(g), d, root);
}

}  // namespace rubble
