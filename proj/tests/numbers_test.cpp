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

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "rubble/enumerate.hpp"
#include "rubble/numbers.hpp"
#include "rubble/parallel.hpp"
#include "rubble/verify.hpp"

namespace rubble {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(EnumerateTest, Examples) {
  EXPECT_EQ(enumerate_distributions(3, 2).size(), 6u);
  const auto orbits = enumerate_distributions(3, 2, family_group({Family::Cycle, 3}));
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0], (Distribution{0, 0, 2}));
  EXPECT_EQ(orbits[1], (Distribution{0, 1, 1}));
  const auto zero = enumerate_distributions(2, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], Distribution(2));
}

TEST(EnumerateTest, TrivialGroupCountsCompositions) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint32_t m = 0; m <= 6; ++m) {
      const auto all = enumerate_distributions(n, m);
      EXPECT_EQ(all.size(), binomial(m + n - 1, n - 1));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      const auto ref = oracle::compositions(n, m);
      EXPECT_EQ(std::set<oracle::Counts>(ref.begin(), ref.end()).size(), all.size());
    }
}

// Orbit representatives against brute-force orbit expansion over every
// automorphism of the graph that the group contains.
TEST(EnumerateTest, OneRepresentativePerOrbit) {
  for (const FamilySpec spec : {FamilySpec{Family::Cycle, 5}, FamilySpec{Family::Ladder, 3},
                                FamilySpec{Family::Prism, 3}, FamilySpec{Family::Mobius, 4},
                                FamilySpec{Family::Path, 6}}) {
    const auto group = family_group(spec);
    const std::size_t n = group.degree();
    for (std::uint32_t m = 0; m <= 5; ++m) {
      std::set<oracle::Counts> seen, reps;
      for (const auto& c : oracle::compositions(n, m)) {
        if (seen.count(c)) continue;
        oracle::Counts best = c;
        for (const auto& p : group.elements()) {
          oracle::Counts image(n);
          for (std::size_t v = 0; v < n; ++v) image[p[v]] = c[v];
          seen.insert(image);
          best = std::min(best, image);
        }
        reps.insert(best);
      }
      std::set<oracle::Counts> got;
      for (const auto& d : enumerate_distributions(n, m, group)) got.insert(d.counts());
      EXPECT_EQ(got, reps) << to_string(spec) << " m=" << m;
    }
  }
}

TEST(EnumerateTest, CanonicalFormIsOrbitMinimum) {
  const auto group = family_group({Family::Cycle, 6});
  const Distribution d{0, 3, 0, 1, 0, 0};
  const Distribution c = group.canonical_form(d);
  EXPECT_TRUE(group.is_canonical(c.counts()));
  EXPECT_EQ(c, (Distribution{0, 0, 0, 1, 0, 3}));
  EXPECT_FALSE(group.is_canonical(d.counts()));
}

TEST(ParallelTest, SmallestHitForAnyWorkerCount) {
  for (unsigned workers : {1u, 2u, 3u, 8u})
    for (std::size_t chunk : {1u, 7u, 32u}) {
      auto hit = parallel_find_first(
          1000, workers, [](std::size_t i, unsigned) { return i >= 417 && i % 3 == 0; }, {},
          chunk);
      EXPECT_EQ(hit, std::optional<std::size_t>(417));
      EXPECT_FALSE(parallel_find_first(50, workers, [](std::size_t, unsigned) { return false; }, {},
                                       chunk));
    }
}

TEST(ParallelTest, PropagatesExceptions) {
  EXPECT_THROW(parallel_find_first(100, 4,
                                   [](std::size_t i, unsigned) -> bool {
                                     if (i == 50) throw Error("boom");
                                     return false;
                                   }),
               Error);
}

TEST(OptimalNumberTest, Examples) {
  auto run = [](FamilySpec spec, MoveSystem mode) {
    return optimal_number(build_family(spec), mode, family_group(spec)).value;
  };
  EXPECT_EQ(run({Family::Cycle, 6}, MoveSystem::Rubbling), 3u);
  EXPECT_EQ(run({Family::Path, 6}, MoveSystem::PebblingOnly), 4u);
  EXPECT_EQ(run({Family::Prism, 3}, MoveSystem::Rubbling), 3u);
  EXPECT_EQ(run({Family::Ladder, 4}, MoveSystem::Rubbling), 4u);
}

TEST(OptimalNumberTest, MatchesOracle) {
  for (const auto& spec : verify::detail::small_instances(7)) {
    const Graph g = build_family(spec);
    for (bool rub : {false, true}) {
      const auto mode = rub ? MoveSystem::Rubbling : MoveSystem::PebblingOnly;
      const auto r = optimal_number(g, mode, family_group(spec));
      EXPECT_EQ(r.value, oracle::optimal(g, rub)) << to_string(spec) << " " << rub;
      EXPECT_TRUE(oracle::solvable(g, r.witness.counts(), rub));
    }
  }
}

TEST(AdversarialNumberTest, Examples) {
  auto run = [](FamilySpec spec, MoveSystem mode, unsigned t) {
    return adversarial_number(build_family(spec), mode, t, family_group(spec));
  };
  EXPECT_EQ(run({Family::Cycle, 4}, MoveSystem::Rubbling, 1).value, 4u);
  EXPECT_EQ(run({Family::Cycle, 5}, MoveSystem::Rubbling, 1).value, 5u);
  EXPECT_EQ(run({Family::Cycle, 3}, MoveSystem::PebblingOnly, 2).value, 5u);
  EXPECT_EQ(run({Family::Cycle, 6}, MoveSystem::PebblingOnly, 2).value, 16u);
  const auto c4 = run({Family::Cycle, 4}, MoveSystem::Rubbling, 1);
  EXPECT_EQ(c4.witness.size(), 3u);
  ASSERT_TRUE(c4.witness_root.has_value());
}

TEST(AdversarialNumberTest, MatchesOracle) {
  for (const FamilySpec spec : {FamilySpec{Family::Path, 3}, FamilySpec{Family::Path, 4},
                                FamilySpec{Family::Cycle, 3}, FamilySpec{Family::Cycle, 4},
                                FamilySpec{Family::Cycle, 5}, FamilySpec{Family::Ladder, 2},
                                FamilySpec{Family::H, 2}}) {
    const Graph g = build_family(spec);
    for (unsigned t : {1u, 2u})
      for (bool rub : {false, true}) {
        const auto mode = rub ? MoveSystem::Rubbling : MoveSystem::PebblingOnly;
        EXPECT_EQ(adversarial_number(g, mode, t, family_group(spec)).value,
                  oracle::adversarial(g, t, rub))
            << to_string(spec) << " t=" << t << " rub=" << rub;
      }
  }
}

TEST(NumbersTest, WitnessesRevalidate) {
  for (const FamilySpec spec : {FamilySpec{Family::Cycle, 5}, FamilySpec{Family::Ladder, 4},
                                FamilySpec{Family::Path, 7}}) {
    const Graph g = build_family(spec);
    for (auto kind : {QuantityKind::Pebbling, QuantityKind::Rubbling,
                      QuantityKind::OptimalPebbling, QuantityKind::OptimalRubbling}) {
      const Quantity q{kind, 1};
      const auto r = verify::compute(g, q, family_group(spec), {});
      EXPECT_EQ(verify::witness_problem(g, q, r), "") << to_string(spec);
    }
  }
}

TEST(NumbersTest, SymmetryDoesNotChangeResults) {
  for (const auto& spec : verify::detail::small_instances(7)) {
    const Graph g = build_family(spec);
    for (auto kind : {QuantityKind::Rubbling, QuantityKind::OptimalRubbling,
                      QuantityKind::OptimalPebbling}) {
      // Adversarial scans start at 2^diam pebbles; keep them small.
      if (kind == QuantityKind::Rubbling && distances(g).diameter() > 3) continue;
      const Quantity q{kind, 1};
      const auto a = verify::compute(g, q, family_group(spec), {});
      const auto b = verify::compute(g, q, PermutationGroup::trivial(g.order()), {});
      EXPECT_EQ(a.value, b.value) << to_string(spec);
      EXPECT_EQ(a.witness, b.witness) << to_string(spec);
      EXPECT_EQ(a.witness_root, b.witness_root) << to_string(spec);
    }
  }
}

TEST(NumbersTest, ParallelismDoesNotChangeResults) {
  const FamilySpec spec{Family::Cycle, 7};
  const Graph g = build_family(spec);
  const auto one = adversarial_number(g, MoveSystem::Rubbling, 1, family_group(spec), {1, {}});
  for (unsigned w : {2u, 4u}) {
    const auto many = adversarial_number(g, MoveSystem::Rubbling, 1, family_group(spec), {w, {}});
    EXPECT_EQ(many.value, one.value);
    EXPECT_EQ(many.witness, one.witness);
    EXPECT_EQ(many.witness_root, one.witness_root);
  }
}

TEST(NumbersTest, GroupMustMatchGraph) {
  const Graph g = build_family({Family::Path, 4});
  EXPECT_THROW(optimal_number(g, MoveSystem::Rubbling, PermutationGroup::trivial(3)), Error);
  const auto rotation = PermutationGroup::generated_by(4, {{1, 2, 3, 0}});
  EXPECT_THROW(optimal_number(g, MoveSystem::Rubbling, rotation), Error);
}

TEST(QuantityTest, Names) {
  EXPECT_EQ(quantity_name(QuantityKind::OptimalRubbling), "opt-rubbling");
  EXPECT_EQ(parse_quantity("pebbling"), QuantityKind::Pebbling);
  EXPECT_THROW(parse_quantity("opt"), Error);
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(closed_form({Family::Cycle, 7}, {QuantityKind::Rubbling, 1}), 9u);
  EXPECT_EQ(closed_form({Family::Ladder, 3}, {QuantityKind::OptimalRubbling, 1}), 3u);
  EXPECT_EQ(closed_form({Family::H, 2}, {QuantityKind::OptimalRubbling, 1}), 3u);
  EXPECT_EQ(closed_form({Family::Mobius, 5}, {QuantityKind::OptimalRubbling, 1}), 4u);
  EXPECT_EQ(closed_form({Family::Prism, 3}, {QuantityKind::OptimalRubbling, 1}), 3u);
  EXPECT_EQ(closed_form({Family::Cycle, 5}, {QuantityKind::Pebbling, 1}), 5u);
  EXPECT_EQ(closed_form({Family::Cycle, 3}, {QuantityKind::Pebbling, 2}), 5u);
  EXPECT_EQ(closed_form({Family::Cycle, 6}, {QuantityKind::Pebbling, 2}), 16u);
  EXPECT_EQ(closed_form({Family::Path, 6}, {QuantityKind::OptimalPebbling, 1}), 4u);
}

// Values tabulated by hand from the formulas, n = first..first+7.
TEST(ClosedFormTest, Tables) {
  auto row = [](Family f, unsigned first, Quantity q) {
    std::vector<std::uint64_t> out;
    for (unsigned n = first; n < first + 8; ++n) out.push_back(closed_form({f, n}, q));
    return out;
  };
  using V = std::vector<std::uint64_t>;
  EXPECT_EQ(row(Family::Cycle, 3, {QuantityKind::Rubbling, 1}), (V{2, 4, 5, 8, 9, 16, 19, 32}));
  EXPECT_EQ(row(Family::Cycle, 3, {QuantityKind::Pebbling, 1}), (V{3, 4, 5, 8, 11, 16, 21, 32}));
  EXPECT_EQ(row(Family::Cycle, 3, {QuantityKind::Pebbling, 3}), (V{7, 12, 13, 24, 27, 48, 53, 96}));
  EXPECT_EQ(row(Family::Path, 1, {QuantityKind::OptimalRubbling, 1}), (V{1, 2, 2, 3, 3, 4, 4, 5}));
  EXPECT_EQ(row(Family::Path, 1, {QuantityKind::OptimalPebbling, 1}), (V{1, 2, 2, 3, 4, 4, 5, 6}));
  EXPECT_EQ(row(Family::Cycle, 3, {QuantityKind::OptimalRubbling, 1}), (V{2, 2, 3, 3, 4, 4, 5, 5}));
  EXPECT_EQ(row(Family::Ladder, 1, {QuantityKind::OptimalRubbling, 1}), (V{2, 2, 3, 4, 4, 5, 6, 6}));
  EXPECT_EQ(row(Family::H, 2, {QuantityKind::OptimalRubbling, 1}), (V{3, 3, 4, 5, 5, 6, 7, 7}));
  EXPECT_EQ(row(Family::Prism, 3, {QuantityKind::OptimalRubbling, 1}), (V{3, 3, 4, 4, 5, 6, 6, 7}));
  EXPECT_EQ(row(Family::Mobius, 3, {QuantityKind::OptimalRubbling, 1}), (V{3, 3, 4, 4, 5, 6, 6, 7}));
}

TEST(ClosedFormTest, HIsLadderPlusOne) {
  for (unsigned n = 2; n <= 20; ++n)
    EXPECT_EQ(closed_form({Family::H, n}, {QuantityKind::OptimalRubbling, 1}),
              closed_form({Family::Ladder, n - 1}, {QuantityKind::OptimalRubbling, 1}) + 1);
}

TEST(ClosedFormTest, Uncovered) {
  EXPECT_THROW(closed_form({Family::Ladder, 3}, {QuantityKind::Rubbling, 1}), NoFormula);
  EXPECT_THROW(closed_form({Family::Cycle, 5}, {QuantityKind::Rubbling, 2}), NoFormula);
  EXPECT_THROW(closed_form({Family::Path, 4}, {QuantityKind::Pebbling, 1}), NoFormula);
  EXPECT_THROW(closed_form({Family::Ladder, 3}, {QuantityKind::OptimalPebbling, 1}), NoFormula);
  EXPECT_THROW(closed_form({Family::Cycle, 4}, {QuantityKind::OptimalRubbling, 2}), NoFormula);
  EXPECT_THROW(closed_form({Family::H, 1}, {QuantityKind::OptimalRubbling, 1}), NoFormula);
  EXPECT_THROW(closed_form({Family::Cycle, 2}, {QuantityKind::OptimalRubbling, 1}), Error);
}

TEST(ConstructionTest, Examples) {
  EXPECT_EQ(upper_bound_construction({Family::Path, 5}), (Distribution{1, 0, 1, 0, 1}));
  Distribution ladder3(6);
  ladder3.add(0);
  ladder3.add(5, 2);
  EXPECT_EQ(upper_bound_construction({Family::Ladder, 3}), ladder3);
  EXPECT_EQ(upper_bound_construction({Family::Ladder, 2}), (Distribution{1, 0, 0, 1}));
}

TEST(ConstructionTest, SolvableWithFormulaSize) {
  for (Family f : {Family::Path, Family::Cycle, Family::Ladder, Family::H, Family::Prism,
                   Family::Mobius}) {
    for (unsigned n = std::max(2u, min_parameter(f)); n <= 9; ++n) {
      const FamilySpec spec{f, n};
      const Distribution d = upper_bound_construction(spec);
      EXPECT_EQ(d.size(), closed_form(spec, {QuantityKind::OptimalRubbling, 1})) << to_string(spec);
      EXPECT_TRUE(Solver(build_family(spec)).solvable(d, MoveSystem::Rubbling)) << to_string(spec);
    }
  }
}

TEST(LempathTest, Characterization) {
  const auto one = characterize_path_solvable(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Distribution{0, 2, 0}));
  const auto two = characterize_path_solvable(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], (Distribution{0, 2, 0, 0, 2, 0}));
  EXPECT_THROW(characterize_path_solvable(0), Error);
}

TEST(LempathTest, MatchesOracle) {
  std::vector<Distribution> expected;
  const Graph g = build_family({Family::Path, 6});
  for (const auto& c : oracle::compositions(6, 4))
    if (oracle::solvable(g, c, false)) expected.push_back(Distribution(c));
  EXPECT_EQ(characterize_path_solvable(2), expected);
}

TEST(CollapsingTest, QuotientsStaySolvable) {
  verify::Options o;
  for (auto mode : {MoveSystem::Rubbling, MoveSystem::PebblingOnly}) {
    const auto tally = verify::collapsing_property(o, mode, 6);
    EXPECT_GT(tally.checked, 100u);
    EXPECT_EQ(tally.violations, 0u) << tally.first;
  }
}

TEST(CollapsingTest, OddCycleReduction) {
  // Merging three consecutive vertices of C_{2k+1} gives C_{2k-1}.
  const auto q = QuotientMap::from_blocks(5, {{4, 0, 1}, {2}, {3}});
  const Graph h = quotient(build_family({Family::Cycle, 5}), q);
  EXPECT_EQ(optimal_number(h, MoveSystem::Rubbling, PermutationGroup::trivial(3)).value, 2u);
}

}  // namespace
}  // namespace rubble
