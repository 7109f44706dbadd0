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

// Verification suites: exhaustive comparison of computed numbers against
// their closed forms, plus randomized and exhaustive property checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rubble/distribution.hpp"
#include "rubble/enumerate.hpp"
#include "rubble/graph.hpp"
#include "rubble/numbers.hpp"
#include "rubble/solver.hpp"

namespace rubble::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  unsigned max_n = 0;     // 0 = no cap
  bool extended = false;  // adds rho(C_8)
  unsigned workers = 1;
  std::uint64_t seed = 20260417;
  std::vector<unsigned> lempath_k{1, 2, 3};
  std::size_t weight_moves = 10000;
  std::size_t monotonicity_trials = 2000;
};

class Report {
 public:
  using Listener = std::function<void(const Check&)>;
  explicit Report(Listener listener = {}) : listener_(std::move(listener)) {}

  void add(Check c) {
    if (listener_) listener_(c);
    checks_.push_back(std::move(c));
  }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }

 private:
  Listener listener_;
  std::vector<Check> checks_;
};

struct Case {
  FamilySpec spec;
  Quantity quantity;
};

namespace detail {

inline bool within(const Options& o, unsigned n) { return o.max_n == 0 || n <= o.max_n; }

inline void add_range(std::vector<Case>& out, const Options& o, Family f, unsigned lo, unsigned hi,
                      Quantity q) {
  for (unsigned n = lo; n <= hi; ++n)
    if (within(o, n)) out.push_back({{f, n}, q});
}

inline std::string describe(const Case& c) {
  std::string s = to_string(c.spec) + " " + std::string(quantity_name(c.quantity.kind));
  if (!is_optimal(c.quantity.kind)) s += " t=" + std::to_string(c.quantity.t);
  return s;
}

// Family instances with at most `max_vertices` vertices and parameter at
// most `max_param`.
inline std::vector<FamilySpec> small_instances(std::size_t max_vertices, unsigned max_param = 100) {
  std::vector<FamilySpec> out;
  for (Family f : {Family::Path, Family::Cycle, Family::Ladder, Family::H, Family::Prism,
                   Family::Mobius}) {
    for (unsigned n = min_parameter(f); n <= max_param; ++n) {
      if (build_family({f, n}).order() > max_vertices) break;
      out.push_back({f, n});
    }
  }
  return out;
}

inline Distribution random_distribution(std::mt19937_64& rng, std::size_t n, std::uint64_t size) {
  Distribution d(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t i = 0; i < size; ++i) d.add(static_cast<Vertex>(pick(rng)));
  return d;
}

template <class T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// formulas

inline std::vector<Case> formula_matrix(const Options& o) {
  using detail::add_range;
  std::vector<Case> m;
  add_range(m, o, Family::Cycle, 3, o.extended ? 8 : 7, {QuantityKind::Rubbling, 1});
  for (unsigned t : {1u, 2u}) add_range(m, o, Family::Cycle, 3, 6, {QuantityKind::Pebbling, t});
  for (auto k : {QuantityKind::OptimalRubbling, QuantityKind::OptimalPebbling}) {
    add_range(m, o, Family::Path, 1, 10, {k, 1});
    add_range(m, o, Family::Cycle, 3, 10, {k, 1});
  }
  const Quantity opt{QuantityKind::OptimalRubbling, 1};
  add_range(m, o, Family::Ladder, 1, 6, opt);
  add_range(m, o, Family::H, 2, 5, opt);
  add_range(m, o, Family::Prism, 3, 6, opt);
  add_range(m, o, Family::Mobius, 3, 6, opt);
  return m;
}

inline NumberResult compute(const Graph& g, const Quantity& q, const PermutationGroup& group,
                            const ScanOptions& scan) {
  return is_optimal(q.kind) ? optimal_number(g, move_system(q.kind), group, scan)
                            : adversarial_number(g, move_system(q.kind), q.t, group, scan);
}

// Empty when the witness re-validates, else the reason.
inline std::string witness_problem(const Graph& g, const Quantity& q, const NumberResult& r) {
  Solver solver(g);
  const MoveSystem mode = move_system(q.kind);
  if (is_optimal(q.kind)) {
    if (r.witness.size() != r.value) return "witness size differs from value";
    if (!solver.solvable(r.witness, mode)) return "witness is not solvable";
    return {};
  }
  if (r.witness.size() + 1 != r.value) return "witness size is not value-1";
  if (!r.witness_root) return "witness has no root";
  if (solver.is_reachable(r.witness, *r.witness_root, q.t, mode))
    return "witness root is reachable";
  return {};
}

// Computes each case, compares it with its closed form and re-validates the
// witness. Adversarial cases are also checked one below the formula and at
// it; instances with at most 8 vertices are recomputed without symmetry.
inline void check_cases(const std::vector<Case>& cases, const Options& o, Report& report) {
  for (const Case& c : cases) {
    const Graph g = build_family(c.spec);
    const auto group = family_group(c.spec);
    const ScanOptions scan{o.workers, {}};
    const auto r = compute(g, c.quantity, group, scan);
    const auto formula = closed_form(c.spec, c.quantity);
    std::ostringstream detail;
    detail << "computed=" << r.value << " formula=" << formula << " witness="
           << to_string(r.witness);
    if (r.witness_root) detail << " root=" << g.name(*r.witness_root);
    bool ok = r.value == formula;
    if (auto problem = witness_problem(g, c.quantity, r); !problem.empty()) {
      ok = false;
      detail << " [" << problem << "]";
    }
    if (!is_optimal(c.quantity.kind)) {
      // Two-sided: a counterexample one below the formula, none at it.
      const auto mode = move_system(c.quantity.kind);
      const bool below = formula >= 1 &&
                         find_unsolvable(g, mode, c.quantity.t, formula - 1, group, scan).has_value();
      const bool at = find_unsolvable(g, mode, c.quantity.t, formula, group, scan).has_value();
      if (!below || at) {
        ok = false;
        detail << " [two-sided check failed: below=" << below << " at=" << at << "]";
      }
    }
    if (g.order() <= 8) {
      const auto plain = compute(g, c.quantity, PermutationGroup::trivial(g.order()), scan);
      if (plain.value != r.value || plain.witness != r.witness ||
          plain.witness_root != r.witness_root) {
        ok = false;
        detail << " [trivial group gives " << plain.value << " " << to_string(plain.witness)
               << "]";
      }
    }
    report.add({"formulas", detail::describe(c), ok, detail.str()});
  }
}

inline void formulas(const Options& o, Report& report) { check_cases(formula_matrix(o), o, report); }

// ---------------------------------------------------------------------------
// lempath, reduction, constructions

inline void lempath(const Options& o, Report& report) {
  for (unsigned k : o.lempath_k) {
    const auto found = characterize_path_solvable(k, {o.workers, {}});
    Distribution expected(3 * k);
    for (unsigned i = 0; i < k; ++i) expected.add(3 * i + 1, 2);
    std::string detail;
    if (found.size() == 1) {
      detail = "unique solvable distribution " + to_string(found.front());
    } else {
      detail = std::to_string(found.size()) + " solvable distributions";
      for (const auto& d : found) detail += " " + to_string(d);
    }
    report.add({"lempath", "k=" + std::to_string(k),
                found.size() == 1 && found.front() == expected, detail});
  }
}

inline void reduction(const Options& o, Report& report) {
  const ScanOptions scan{o.workers, {}};
  std::string summary;
  bool all = true;
  for (unsigned n : {2u, 3u}) {
    const FamilySpec big{Family::Cycle, 2 * n + 1}, small{Family::Cycle, 2 * n - 1};
    const auto rho = adversarial_number(build_family(big), MoveSystem::Rubbling, 1,
                                        family_group(big), scan);
    const auto f2 = adversarial_number(build_family(small), MoveSystem::PebblingOnly, 2,
                                       family_group(small), scan);
    const bool ok = rho.value == f2.value;
    all = all && ok;
    if (!summary.empty()) summary += "; ";
    summary += "ρ(C_" + std::to_string(2 * n + 1) + ")" + (ok ? "=" : "≠") + "f_2(C_" +
               std::to_string(2 * n - 1) + ")";
    summary += ok ? "=" + std::to_string(rho.value)
                  : " (" + std::to_string(rho.value) + " vs " + std::to_string(f2.value) + ")";
  }
  report.add({"reduction", "odd cycles", all, summary});
}

inline void constructions(const Options& o, Report& report) {
  std::vector<FamilySpec> specs;
  auto range = [&](Family f, unsigned lo, unsigned hi) {
    for (unsigned n = lo; n <= hi; ++n)
      if (detail::within(o, n)) specs.push_back({f, n});
  };
  range(Family::Path, 1, 10);
  range(Family::Cycle, 3, 10);
  range(Family::Ladder, 1, 6);
  range(Family::H, 2, 5);
  range(Family::Prism, 3, 6);
  range(Family::Mobius, 3, 6);
  for (const auto& spec : specs) {
    const Graph g = build_family(spec);
    const Distribution d = upper_bound_construction(spec);
    const auto formula = closed_form(spec, {QuantityKind::OptimalRubbling, 1});
    const bool solvable = Solver(g).solvable(d, MoveSystem::Rubbling);
    std::ostringstream detail;
    detail << to_string(d) << " size=" << d.size() << " formula=" << formula
           << " solvable=" << (solvable ? "true" : "false");
    report.add({"constructions", to_string(spec), solvable && d.size() == formula, detail.str()});
  }
}

// ---------------------------------------------------------------------------
// properties

struct Tally {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = what();
  }
  Check to_check(std::string name) const {
    std::string detail = std::to_string(checked) + " checked, " + std::to_string(violations) +
                         " violations";
    if (violations) detail += "; first: " + first;
    return {"properties", std::move(name), violations == 0 && checked > 0, detail};
  }
};

// Weight toward the root never increases along random legal move sequences.
inline Tally weight_property(const Options& o) {
  std::mt19937_64 rng(o.seed);
  const auto specs = detail::small_instances(1000, 6);
  Tally tally;
  while (tally.checked < o.weight_moves) {
    const FamilySpec spec = detail::choose(rng, specs);
    const Graph g = build_family(spec);
    const DistanceTable dist(g);
    const auto size = std::uniform_int_distribution<std::uint64_t>(1, 16)(rng);
    Distribution d = detail::random_distribution(rng, g.order(), size);
    const auto root = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng));
    while (tally.checked < o.weight_moves) {
      const auto moves = legal_moves(g, d, MoveSystem::Rubbling);
      if (moves.empty()) break;
      const Move& m = detail::choose(rng, moves);
      Distribution next = apply_move(g, d, m);
      const auto before = weight(dist, d, root), after = weight(dist, next, root);
      tally.record(after <= before, [&] {
        return to_string(spec) + " " + to_string(d) + " " + to_string(m, &g) + ": " +
               to_string(before) + " -> " + to_string(after);
      });
      d = std::move(next);
    }
  }
  return tally;
}

// Adding a pebble keeps a reachable root reachable; removing one keeps an
// unreachable root unreachable.
inline Tally monotonicity_property(const Options& o) {
  std::mt19937_64 rng(o.seed + 1);
  const auto specs = detail::small_instances(1000, 6);
  Tally tally;
  for (std::size_t trial = 0; trial < o.monotonicity_trials; ++trial) {
    const FamilySpec spec = detail::choose(rng, specs);
    Solver solver(build_family(spec));
    const std::size_t n = solver.graph().order();
    auto uniform = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const Distribution d = detail::random_distribution(rng, n, uniform(1, 10));
    const auto root = static_cast<Vertex>(uniform(0, n - 1));
    const auto v = static_cast<Vertex>(uniform(0, n - 1));
    const unsigned t = static_cast<unsigned>(uniform(1, 2));
    const MoveSystem mode = uniform(0, 1) ? MoveSystem::Rubbling : MoveSystem::PebblingOnly;
    const bool base = solver.is_reachable(d, root, t, mode);
    Distribution changed = d;
    if (base) {
      changed.add(v);
    } else {
      std::vector<Vertex> occupied;
      for (Vertex u = 0; u < n; ++u)
        if (d[u]) occupied.push_back(u);
      changed.remove(detail::choose(rng, occupied));
    }
    const bool after = solver.is_reachable(changed, root, t, mode);
    tally.record(after == base, [&] {
      return to_string(spec) + " " + to_string(d) + " -> " + to_string(changed) + " root " +
             std::to_string(root) + " t=" + std::to_string(t) + " " +
             std::string(to_string(mode));
    });
  }
  return tally;
}

// A smoothing move at v keeps every other t-reachable vertex t-reachable.
inline Tally smoothing_property(MoveSystem mode, std::size_t max_vertices = 8,
                                std::uint64_t max_size = 6) {
  Tally tally;
  for (const auto& spec : detail::small_instances(max_vertices)) {
    Solver solver(build_family(spec));
    const Graph& g = solver.graph();
    std::vector<Vertex> thin;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 2) thin.push_back(v);
    if (thin.empty()) continue;
    for (std::uint64_t m = 3; m <= max_size; ++m) {
      for (const auto& d : enumerate_distributions(g.order(), m)) {
        for (Vertex v : thin) {
          if (d[v] < 3) continue;
          const Distribution s = smoothing_move(g, d, v);
          for (Vertex u = 0; u < g.order(); ++u) {
            if (u == v) continue;
            for (unsigned t : {1u, 2u}) {
              if (!solver.is_reachable(d, u, t, mode)) continue;
              tally.record(solver.is_reachable(s, u, t, mode), [&] {
                return to_string(spec) + " " + to_string(d) + " smooth at " + g.name(v) +
                       " loses " + g.name(u) + " t=" + std::to_string(t);
              });
            }
          }
        }
      }
    }
  }
  return tally;
}

// Partitions tried on each instance: every single-edge contraction plus a
// few random partitions.
inline std::vector<QuotientMap> test_partitions(const Graph& g, std::mt19937_64& rng,
                                                unsigned random_count = 2) {
  std::vector<QuotientMap> out;
  const auto n = g.order();
  if (n < 2) return out;
  for (auto [a, b] : g.edges()) {
    std::vector<std::vector<Vertex>> blocks{{a, b}};
    for (Vertex v = 0; v < n; ++v)
      if (v != a && v != b) blocks.push_back({v});
    out.push_back(QuotientMap::from_blocks(n, std::move(blocks)));
  }
  for (unsigned i = 0; i < random_count && n > 2; ++i) {
    const auto k = std::uniform_int_distribution<std::size_t>(2, n - 1)(rng);
    std::vector<std::vector<Vertex>> blocks(k);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t j = 0; j < n; ++j)
      blocks[j < k ? j : std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)].push_back(
          order[j]);
    out.push_back(QuotientMap::from_blocks(n, std::move(blocks)));
  }
  return out;
}

// Solvable distributions stay solvable on every tested quotient, and the
// optimal number never grows under collapsing.
inline Tally collapsing_property(const Options& o, MoveSystem mode, std::size_t max_vertices = 8) {
  std::mt19937_64 rng(o.seed + (mode == MoveSystem::Rubbling ? 2 : 3));
  Tally tally;
  for (const auto& spec : detail::small_instances(max_vertices)) {
    const Graph g = build_family(spec);
    Solver solver(g);
    const auto opt = optimal_number(g, mode, family_group(spec)).value;
    std::vector<Distribution> solvable;
    for (std::uint64_t m = opt; m <= opt + 1; ++m)
      for (const auto& d : enumerate_distributions(g.order(), m))
        if (solver.solvable(d, mode)) solvable.push_back(d);
    for (const auto& q : test_partitions(g, rng)) {
      const Graph h = quotient(g, q);
      Solver qsolver(h);
      for (const auto& d : solvable) {
        const Distribution dq = quotient_distribution(d, q);
        tally.record(qsolver.solvable(dq, mode), [&] {
          return to_string(spec) + " " + to_string(d) + " -> " + to_string(dq);
        });
      }
      const auto qopt =
          optimal_number(h, mode, PermutationGroup::trivial(h.order())).value;
      tally.record(qopt <= opt, [&] {
        return to_string(spec) + " quotient optimum " + std::to_string(qopt) + " > " +
               std::to_string(opt);
      });
    }
  }
  return tally;
}

// Pruned search and acyclic-only search agree everywhere within the caps.
inline Tally nocycle_property(std::size_t max_vertices = kAcyclicMaxVertices,
                              std::uint64_t max_size = kAcyclicMaxPebbles) {
  Tally tally;
  for (const auto& spec : detail::small_instances(max_vertices)) {
    Solver solver(build_family(spec));
    const Graph& g = solver.graph();
    for (std::uint64_t m = 1; m <= max_size; ++m)
      for (const auto& d : enumerate_distributions(g.order(), m))
        for (Vertex r = 0; r < g.order(); ++r)
          for (unsigned t : {1u, 2u})
            for (auto mode : {MoveSystem::Rubbling, MoveSystem::PebblingOnly}) {
              const Query q{d, r, t, mode, {}, true};
              const bool a = solver.reachable(q).reachable;
              const bool b = acyclic_reachable(g, q);
              tally.record(a == b, [&] {
                return to_string(spec) + " " + to_string(d) + " root " + g.name(r) +
                       " t=" + std::to_string(t) + " " + std::string(to_string(mode));
              });
            }
  }
  return tally;
}

// All vertex sets of degree-2 vertices that induce a path.
inline std::vector<std::vector<Vertex>> all_threads(const Graph& g) {
  std::vector<Vertex> thin;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2) thin.push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << thin.size()); ++mask) {
    std::vector<Vertex> t;
    for (std::size_t i = 0; i < thin.size(); ++i)
      if (mask >> i & 1) t.push_back(thin[i]);
    try {
      validate_thread(g, t);
      out.push_back(std::move(t));
    } catch (const Error&) {
    }
  }
  return out;
}

// Forbidding strict rubbling into a thread never changes reachability of a
// vertex off the thread.
inline Tally thread_property(std::uint64_t max_size = 5) {
  Tally tally;
  for (const FamilySpec spec : {FamilySpec{Family::Cycle, 5}, FamilySpec{Family::Cycle, 7},
                                FamilySpec{Family::Path, 6}}) {
    Solver solver(build_family(spec));
    const Graph& g = solver.graph();
    const auto threads = all_threads(g);
    for (std::uint64_t m = 1; m <= max_size; ++m)
      for (const auto& d : enumerate_distributions(g.order(), m))
        for (const auto& thread : threads)
          for (Vertex x = 0; x < g.order(); ++x) {
            if (std::find(thread.begin(), thread.end(), x) != thread.end()) continue;
            const bool free = solver.is_reachable(d, x, 1, MoveSystem::Rubbling);
            const bool restricted = thread_restricted_equivalence(solver, thread, d, x);
            tally.record(free == restricted, [&] {
              return to_string(spec) + " " + to_string(d) + " x=" + g.name(x);
            });
          }
  }
  return tally;
}

// 2^diam <= rho_t <= f_t, and rho_opt <= f_opt.
inline Tally bounds_property(const Options& o) {
  Tally tally;
  const ScanOptions scan{o.workers, {}};
  for (unsigned n = 3; n <= 6 && detail::within(o, n); ++n) {
    const FamilySpec spec{Family::Cycle, n};
    const Graph g = build_family(spec);
    const auto group = family_group(spec);
    const std::uint64_t lower = std::uint64_t{1} << DistanceTable(g).diameter();
    for (unsigned t : {1u, 2u}) {
      const auto rho = adversarial_number(g, MoveSystem::Rubbling, t, group, scan).value;
      const auto f = adversarial_number(g, MoveSystem::PebblingOnly, t, group, scan).value;
      tally.record((t > 1 || lower <= rho) && rho <= f, [&] {
        return to_string(spec) + " t=" + std::to_string(t) + ": 2^diam=" +
               std::to_string(lower) + " rho=" + std::to_string(rho) + " f=" + std::to_string(f);
      });
    }
  }
  for (Family fam : {Family::Path, Family::Cycle}) {
    for (unsigned n = min_parameter(fam); n <= 10 && detail::within(o, n); ++n) {
      const FamilySpec spec{fam, n};
      const Graph g = build_family(spec);
      const auto group = family_group(spec);
      const auto r = optimal_number(g, MoveSystem::Rubbling, group, scan).value;
      const auto f = optimal_number(g, MoveSystem::PebblingOnly, group, scan).value;
      tally.record(r <= f, [&] {
        return to_string(spec) + ": opt rho=" + std::to_string(r) + " > opt f=" + std::to_string(f);
      });
    }
  }
  return tally;
}

// On a path with at most two pebbles everywhere, an empty endpoint is never
// 2-reachable.
inline Tally smoothpath_property(MoveSystem mode, unsigned max_n = 8) {
  Tally tally;
  for (unsigned n = 2; n <= max_n; ++n) {
    Solver solver(build_family({Family::Path, n}));
    std::vector<Count> c(n, 0);
    for (;;) {
      const Distribution d(c);
      for (Vertex end : {Vertex{0}, static_cast<Vertex>(n - 1)}) {
        if (d[end] != 0) continue;
        tally.record(!solver.is_reachable(d, end, 2, mode), [&] {
          return "P_" + std::to_string(n) + " " + to_string(d) + " endpoint " +
                 std::to_string(end + 1);
        });
      }
      std::size_t i = 0;
      while (i < n && c[i] == 2) c[i++] = 0;
      if (i == n) break;
      ++c[i];
    }
  }
  return tally;
}

inline void properties(const Options& o, Report& report) {
  report.add(weight_property(o).to_check("weight"));
  report.add(monotonicity_property(o).to_check("monotonicity"));
  report.add(smoothing_property(MoveSystem::Rubbling).to_check("smoothing rubbling"));
  report.add(smoothing_property(MoveSystem::PebblingOnly).to_check("smoothing pebbling"));
  report.add(collapsing_property(o, MoveSystem::Rubbling).to_check("collapsing rubbling"));
  report.add(collapsing_property(o, MoveSystem::PebblingOnly).to_check("collapsing pebbling"));
  report.add(nocycle_property().to_check("nocycle"));
  report.add(thread_property().to_check("thread"));
  report.add(bounds_property(o).to_check("bounds"));
  report.add(smoothpath_property(MoveSystem::PebblingOnly).to_check("smoothpath pebbling"));
  report.add(smoothpath_property(MoveSystem::Rubbling).to_check("smoothpath rubbling"));
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "lempath", "reduction", "properties",
                                              "constructions"};
  return names;
}

inline void run_suite(const std::string& name, const Options& o, Report& report) {
  if (name == "formulas") formulas(o, report);
  else if (name == "lempath") lempath(o, report);
  else if (name == "reduction") reduction(o, report);
  else if (name == "properties") properties(o, report);
  else if (name == "constructions") constructions(o, report);
  else throw Error("unknown suite '" + name + "'");
}

}  // namespace rubble::verify
