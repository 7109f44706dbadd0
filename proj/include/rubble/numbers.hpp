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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rubble/distribution.hpp"
#include "rubble/enumerate.hpp"
#include "rubble/error.hpp"
#include "rubble/graph.hpp"
#include "rubble/parallel.hpp"
#include "rubble/solver.hpp"

namespace rubble {

enum class QuantityKind { Pebbling, Rubbling, OptimalPebbling, OptimalRubbling };

struct Quantity {
  QuantityKind kind;
  unsigned t = 1;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

inline std::string_view quantity_name(QuantityKind k) {
  switch (k) {
    case QuantityKind::Pebbling: return "pebbling";
    case QuantityKind::Rubbling: return "rubbling";
    case QuantityKind::OptimalPebbling: return "opt-pebbling";
    case QuantityKind::OptimalRubbling: return "opt-rubbling";
  }
  return "?";
}

inline QuantityKind parse_quantity(std::string_view s) {
  for (auto k : {QuantityKind::Pebbling, QuantityKind::Rubbling, QuantityKind::OptimalPebbling,
                 QuantityKind::OptimalRubbling})
    if (quantity_name(k) == s) return k;
  throw Error("unknown quantity '" + std::string(s) + "'");
}

inline bool is_optimal(QuantityKind k) {
  return k == QuantityKind::OptimalPebbling || k == QuantityKind::OptimalRubbling;
}

inline MoveSystem move_system(QuantityKind k) {
  return k == QuantityKind::Pebbling || k == QuantityKind::OptimalPebbling
             ? MoveSystem::PebblingOnly
             : MoveSystem::Rubbling;
}

// For optimal kinds the witness is a smallest solvable distribution; for the
// adversarial kinds it is an unsolvable distribution of size value-1 and the
// root it fails on. Witnesses are the lexicographically smallest qualifying
// distribution of their size.
struct NumberResult {
  std::uint64_t value = 0;
  Distribution witness;
  std::optional<Vertex> witness_root;
};

struct ScanOptions {
  unsigned workers = 1;
  ProgressFn progress;
};

struct Counterexample {
  Distribution dist;
  Vertex root;
};

namespace detail {

inline std::vector<Solver> make_solvers(const Graph& g, unsigned workers) {
  return std::vector<Solver>(std::max(1u, workers), Solver(g));
}

inline void check_group(const Graph& g, const PermutationGroup& group) {
  if (group.degree() != g.order()) throw Error("group degree does not match the graph");
  for (const auto& p : group.elements())
    if (!is_automorphism(g, p)) throw Error("group contains a non-automorphism");
}

}  // namespace detail

// Smallest size-m distribution (orbit representative) that is solvable.
inline std::optional<Distribution> find_solvable(const Graph& g, MoveSystem mode, std::uint64_t m,
                                                 const PermutationGroup& group,
                                                 const ScanOptions& opts = {}) {
  detail::check_group(g, group);
  auto reps = enumerate_distributions(g.order(), m, group);
  auto solvers = detail::make_solvers(g, opts.workers);
  auto hit = parallel_find_first(
      reps.size(), opts.workers,
      [&](std::size_t i, unsigned w) { return solvers[w].solvable(reps[i], mode); },
      opts.progress);
  if (!hit) return std::nullopt;
  return reps[*hit];
}

// Smallest size-m distribution that is not t-fold solvable, with the
// smallest root it fails on.
inline std::optional<Counterexample> find_unsolvable(const Graph& g, MoveSystem mode, unsigned t,
                                                     std::uint64_t m,
                                                     const PermutationGroup& group,
                                                     const ScanOptions& opts = {}) {
  detail::check_group(g, group);
  if (t < 1) throw Error("t must be at least 1");
  auto reps = enumerate_distributions(g.order(), m, group);
  auto solvers = detail::make_solvers(g, opts.workers);
  auto hit = parallel_find_first(
      reps.size(), opts.workers,
      [&](std::size_t i, unsigned w) {
        return solvers[w].first_unsolved_root(reps[i], mode, t).has_value();
      },
      opts.progress);
  if (!hit) return std::nullopt;
  return Counterexample{reps[*hit], *solvers[0].first_unsolved_root(reps[*hit], mode, t)};
}

// Least m admitting a solvable size-m distribution.
inline NumberResult optimal_number(const Graph& g, MoveSystem mode, const PermutationGroup& group,
                                   const ScanOptions& opts = {}) {
  for (std::uint64_t m = 1;; ++m) {
    if (auto d = find_solvable(g, mode, m, group, opts)) return {m, *d, std::nullopt};
    if (m > g.order())
      throw InternalError("no solvable distribution with one pebble per vertex");
  }
}

// Least m such that every size-m distribution is t-fold solvable. Scans
// upward from 2^diameter, which no counterexample-free size can undercut.
inline NumberResult adversarial_number(const Graph& g, MoveSystem mode, unsigned t,
                                       const PermutationGroup& group,
                                       const ScanOptions& opts = {}) {
  const unsigned diam = DistanceTable(g).diameter();
  if (diam > 40) throw Error("diameter too large for exhaustive search");
  const std::uint64_t lower = std::uint64_t{1} << diam;
  std::optional<Counterexample> previous;
  for (std::uint64_t m = lower;; ++m) {
    auto cx = find_unsolvable(g, mode, t, m, group, opts);
    if (cx) {
      previous = std::move(cx);
      continue;
    }
    if (!previous) previous = find_unsolvable(g, mode, t, m - 1, group, opts);
    if (!previous)
      throw InternalError("no unsolvable distribution below 2^diameter pebbles");
    return {m, previous->dist, previous->root};
  }
}

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

inline std::uint64_t pow2(unsigned k) {
  if (k > 62) throw Error("closed form overflows");
  return std::uint64_t{1} << k;
}

}  // namespace detail

inline std::uint64_t closed_form(const FamilySpec& spec, const Quantity& q) {
  using detail::ceil_div;
  using detail::pow2;
  build_family(spec);  // parameter check
  const std::uint64_t n = spec.n;
  const std::uint64_t t = q.t;
  if (t < 1) throw Error("t must be at least 1");
  auto none = [&]() -> std::uint64_t {
    throw NoFormula("no formula for " + std::string(quantity_name(q.kind)) +
                    (is_optimal(q.kind) ? "" : " t=" + std::to_string(t)) + " on " +
                    to_string(spec));
  };
  if (is_optimal(q.kind) && t != 1) return none();

  switch (q.kind) {
    case QuantityKind::Pebbling:
      if (spec.family != Family::Cycle) return none();
      if (n % 2 == 0) return pow2(static_cast<unsigned>(n / 2)) * t;
      {
        const auto k = static_cast<unsigned>(n / 2);
        return 2 * (pow2(k + 1) / 3) + (t - 1) * pow2(k) + 1;
      }
    case QuantityKind::Rubbling:
      if (spec.family != Family::Cycle || t != 1) return none();
      if (n % 2 == 0) return pow2(static_cast<unsigned>(n / 2));
      {
        const auto k = static_cast<unsigned>(n / 2);
        return (7 * pow2(k - 1) - 2) / 3 + 1;
      }
    case QuantityKind::OptimalPebbling:
      if (spec.family != Family::Path && spec.family != Family::Cycle) return none();
      return ceil_div(2 * n, 3);
    case QuantityKind::OptimalRubbling:
      switch (spec.family) {
        case Family::Path: return ceil_div(n + 1, 2);
        case Family::Cycle: return ceil_div(n, 2);
        case Family::Ladder: return ceil_div(2 * (n + 1), 3);
        case Family::H:
          // Ladder on n-1 columns, plus one.
          if (n < 2) return none();
          return ceil_div(2 * n, 3) + 1;
        case Family::Prism:
        case Family::Mobius: return n == 3 ? 3 : ceil_div(2 * n, 3);
      }
  }
  return none();
}

// ---------------------------------------------------------------------------
// Upper-bound constructions

namespace detail {

struct LadderPattern {
  std::vector<Count> x, y;  // columns 1..n at indices 0..n-1
};

// n = 3k + r. x-row pebbles on columns = 1 (mod 3), y-row pebbles on
// columns = 2 (mod 3), with a double on v_ny when r is 0 or 1. For r = 2
// column n is already = 2 (mod 3) and keeps a single pebble; doubling it
// there would exceed 2k+2.
inline LadderPattern ladder_pattern(unsigned n) {
  LadderPattern p{std::vector<Count>(n, 0), std::vector<Count>(n, 0)};
  const unsigned r = n % 3;
  for (unsigned i = 1; i <= n; ++i) {
    if (i % 3 == 1 && !(r == 1 && i == n)) p.x[i - 1] = 1;
    if (i % 3 == 2 && !(r == 0 && i == n - 1)) p.y[i - 1] = 1;
  }
  if (r != 2) p.y[n - 1] = 2;
  return p;
}

}  // namespace detail

// The explicit solvable distributions behind each optimal-rubbling upper
// bound; their sizes equal closed_form(spec, opt-rubbling).
inline Distribution upper_bound_construction(const FamilySpec& spec) {
  const Graph g = build_family(spec);
  const unsigned n = spec.n;
  Distribution d(g.order());
  switch (spec.family) {
    case Family::Path:
      for (unsigned i = 1; i <= n; ++i)
        if (i % 2 == 1 || i == n) d.add(i - 1);
      break;
    case Family::Cycle:
      for (unsigned i = 1; i <= n; i += 2) d.add(i - 1);
      break;
    case Family::Ladder:
    case Family::H: {
      auto p = detail::ladder_pattern(n);
      for (unsigned c = 0; c < n; ++c) {
        d.add(c, p.x[c]);
        d.add(n + c, p.y[c]);
      }
      // H n hangs v_{n+1}y off v_ny; it needs its own pebble only when
      // v_ny holds a single one.
      if (spec.family == Family::H && n % 3 == 2) d.add(2 * n);
      break;
    }
    case Family::Prism:
    case Family::Mobius: {
      if (n == 3) {
        d.add(0, 2);  // v1x
        d.add(n);     // v1y
        break;
      }
      if (spec.family == Family::Mobius && n == 4) {
        // The embedded ladder pattern misses v4x on M_4.
        d.add(0);      // v1x
        d.add(2);      // v3x
        d.add(n + 1);  // v2y
        break;
      }
      auto p = detail::ladder_pattern(n - 1);
      for (unsigned c = 0; c + 1 < n; ++c) {
        d.add(c, p.x[c]);
        d.add(n + c, p.y[c]);
      }
      break;
    }
  }
  return d;
}

// Every size-2k distribution on P_3k solvable by pebbling moves alone.
inline std::vector<Distribution> characterize_path_solvable(unsigned k,
                                                            const ScanOptions& opts = {}) {
  if (k < 1) throw Error("k must be positive");
  const Graph g = build_family({Family::Path, 3 * k});
  auto all = enumerate_distributions(g.order(), 2 * k);
  std::vector<char> ok(all.size(), 0);
  auto solvers = detail::make_solvers(g, opts.workers);
  parallel_find_first(
      all.size(), opts.workers,
      [&](std::size_t i, unsigned w) {
        ok[i] = solvers[w].solvable(all[i], MoveSystem::PebblingOnly);
        return false;
      },
      opts.progress);
  std::vector<Distribution> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (ok[i]) out.push_back(all[i]);
  return out;
}

}  // namespace rubble
