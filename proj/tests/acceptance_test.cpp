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

// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact integer equality; the only tolerance is the wall-clock budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rubble/verify.hpp"

namespace {

using namespace rubble;
using verify::Case;

// Wall-clock budget for the whole rubbling-cycle criterion, C_8 included.
constexpr double kCycleBudgetSeconds = 15 * 60;

struct Outcome {
  bool passed;
  std::string summary;
};

std::vector<Case> range(Family f, unsigned lo, unsigned hi, Quantity q) {
  std::vector<Case> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back({{f, n}, q});
  return out;
}

std::vector<Case> concat(std::initializer_list<std::vector<Case>> parts) {
  std::vector<Case> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Runs the suite body, then folds its checks into one line: the list of
// computed values, or the failing checks.
Outcome fold(const std::function<void(verify::Report&)>& body, bool with_values) {
  verify::Report report;
  body(report);
  std::ostringstream s;
  std::size_t failed = 0;
  for (const auto& c : report.checks()) {
    if (c.passed) continue;
    ++failed;
    s << " FAILED[" << c.name << ": " << c.detail << "]";
  }
  if (failed == 0 && with_values) {
    s << " values";
    for (const auto& c : report.checks()) {
      auto pos = c.detail.find("computed=");
      auto end = c.detail.find(' ', pos);
      s << " [" << c.name << "]=" << c.detail.substr(pos + 9, end - pos - 9);
    }
  } else if (failed == 0) {
    for (const auto& c : report.checks()) s << " [" << c.name << ": " << c.detail << "]";
  }
  return {failed == 0 && !report.checks().empty(),
          std::to_string(report.checks().size()) + " checks" + s.str()};
}

}  // namespace

int main() {
  verify::Options o;
  o.workers = std::max(1u, std::thread::hardware_concurrency());
  const Quantity opt_r{QuantityKind::OptimalRubbling, 1};
  const Quantity opt_f{QuantityKind::OptimalPebbling, 1};

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"adversarial rubbling of cycles C_3..C_8, two-sided",
       [&] {
         const auto start = std::chrono::steady_clock::now();
         auto out = fold(
             [&](verify::Report& r) {
               verify::check_cases(range(Family::Cycle, 3, 8, {QuantityKind::Rubbling, 1}), o, r);
             },
             true);
         const double secs =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         if (secs > kCycleBudgetSeconds) {
           out.passed = false;
           out.summary += " over budget";
         }
         return out;
       }},
      {"t-pebbling of cycles C_3..C_6, t=1,2",
       [&] {
         return fold(
             [&](verify::Report& r) {
               verify::check_cases(concat({range(Family::Cycle, 3, 6, {QuantityKind::Pebbling, 1}),
                                           range(Family::Cycle, 3, 6, {QuantityKind::Pebbling, 2})}),
                                   o, r);
             },
             true);
       }},
      {"optimal numbers of paths (n<=10) and cycles (3<=n<=10)",
       [&] {
         return fold(
             [&](verify::Report& r) {
               verify::check_cases(
                   concat({range(Family::Path, 1, 10, opt_r), range(Family::Path, 1, 10, opt_f),
                           range(Family::Cycle, 3, 10, opt_r), range(Family::Cycle, 3, 10, opt_f)}),
                   o, r);
             },
             true);
       }},
      {"optimal rubbling of ladders, H, prisms, Mobius ladders",
       [&] {
         return fold(
             [&](verify::Report& r) {
               verify::check_cases(
                   concat({range(Family::Ladder, 1, 6, opt_r), range(Family::H, 2, 5, opt_r),
                           range(Family::Prism, 3, 6, opt_r), range(Family::Mobius, 3, 6, opt_r)}),
                   o, r);
             },
             true);
       }},
      {"unique solvable size-2k distribution on P_3k, k=1..3",
       [&] { return fold([&](verify::Report& r) { verify::lempath(o, r); }, false); }},
      {"odd-cycle rubbling equals 2-pebbling of the shorter odd cycle",
       [&] { return fold([&](verify::Report& r) { verify::reduction(o, r); }, false); }},
      {"upper-bound constructions solvable with formula size",
       [&] {
         return fold(
             [&](verify::Report& r) {
               verify::constructions(o, r);
             },
             false);
       }},
      {"property suites (weight, monotonicity, smoothing, collapsing, no-cycle, thread, bounds, "
       "smooth paths)",
       [&] { return fold([&](verify::Report& r) { verify::properties(o, r); }, false); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.passed;
    std::cout << "criterion " << i + 1 << " " << (out.passed ? "PASS" : "FAIL") << " ("
              << criteria[i].title << ", " << secs << "s): " << out.summary << std::endl;
  }
  std::cout << (failures ? "acceptance FAILED" : "acceptance PASSED") << std::endl;
  return failures ? 1 : 0;
}
