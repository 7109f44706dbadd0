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
#include <set>
#include <vector>

#include "rubble/distribution.hpp"
#include "rubble/error.hpp"
#include "rubble/graph.hpp"

namespace rubble {

// All elements of the group generated by a few vertex permutations. Orders
// here are at most 4n, so the elements are simply listed.
class PermutationGroup {
 public:
  static PermutationGroup trivial(std::size_t n) {
    PermutationGroup g;
    g.n_ = n;
    g.elements_.push_back(identity(n));
    return g;
  }

  static PermutationGroup generated_by(std::size_t n, const std::vector<Permutation>& gens) {
    for (const auto& p : gens)
      if (p.size() != n) throw Error("generator has the wrong degree");
    std::set<Permutation> seen{identity(n)};
    std::vector<Permutation> frontier{identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& p : frontier) {
        for (const auto& gen : gens) {
          Permutation q(n);
          for (std::size_t v = 0; v < n; ++v) q[v] = gen[p[v]];
          if (seen.insert(q).second) next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    PermutationGroup g;
    g.n_ = n;
    g.elements_.assign(seen.begin(), seen.end());
    return g;
  }

  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  // True when no image of `counts` is lexicographically smaller.
  bool is_canonical(const std::vector<Count>& counts) const {
    std::vector<Count> image(n_);
    for (const auto& p : elements_) {
      for (std::size_t v = 0; v < n_; ++v) image[p[v]] = counts[v];
      if (image < counts) return false;
    }
    return true;
  }

  Distribution canonical_form(const Distribution& d) const {
    std::vector<Count> best = d.counts(), image(n_);
    for (const auto& p : elements_) {
      for (std::size_t v = 0; v < n_; ++v) image[p[v]] = d[static_cast<Vertex>(v)];
      if (image < best) best = image;
    }
    return Distribution(std::move(best));
  }

 private:
  static Permutation identity(std::size_t n) {
    Permutation p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = static_cast<Vertex>(v);
    return p;
  }

  std::size_t n_ = 0;
  std::vector<Permutation> elements_;
};

inline PermutationGroup family_group(const FamilySpec& spec) {
  return PermutationGroup::generated_by(build_family(spec).order(),
                                        automorphism_generators(spec));
}

// Steps `c` to the next composition with the same sum in ascending
// lexicographic order. Returns false after the last one, (m,0,...,0).
inline bool next_composition(std::vector<Count>& c) {
  std::size_t last = c.size();
  while (last > 0 && c[last - 1] == 0) --last;
  if (last <= 1) return false;
  const std::size_t i = last - 2;  // last nonzero sits at i+1
  Count rest = 0;
  for (std::size_t j = i + 1; j < c.size(); ++j) {
    rest += c[j];
    c[j] = 0;
  }
  ++c[i];
  c.back() = rest - 1;
  return true;
}

// Calls fn once per orbit of size-m distributions on n vertices, passing the
// lexicographically smallest member, in ascending lexicographic order.
template <class Fn>
void for_each_distribution(std::size_t n, std::uint64_t m, const PermutationGroup& group, Fn fn) {
  if (n == 0) throw Error("need at least one vertex");
  if (group.degree() != n) throw Error("group degree does not match vertex count");
  if (m > 0xffffffffu) throw Error("too many pebbles");
  std::vector<Count> c(n, 0);
  c.back() = static_cast<Count>(m);
  do {
    if (group.order() == 1 || group.is_canonical(c)) fn(Distribution(c));
  } while (next_composition(c));
}

inline std::vector<Distribution> enumerate_distributions(std::size_t n, std::uint64_t m,
                                                         const PermutationGroup& group) {
  std::vector<Distribution> out;
  for_each_distribution(n, m, group, [&](Distribution d) { out.push_back(std::move(d)); });
  return out;
}

inline std::vector<Distribution> enumerate_distributions(std::size_t n, std::uint64_t m) {
  return enumerate_distributions(n, m, PermutationGroup::trivial(n));
}

}  // namespace rubble
