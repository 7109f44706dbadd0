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

// The `rubble` command line: compute, check, verify, enumerate.
//
// Exit codes: 0 all checks pass, 1 mismatch or failed validation,
// 2 usage or input error.

#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rubble/certificate.hpp"
#include "rubble/distribution.hpp"
#include "rubble/enumerate.hpp"
#include "rubble/error.hpp"
#include "rubble/graph.hpp"
#include "rubble/io.hpp"
#include "rubble/numbers.hpp"
#include "rubble/report.hpp"
#include "rubble/solver.hpp"
#include "rubble/verify.hpp"

namespace rubble::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Compute, Check, Verify, Enumerate };
enum class Format { Text, Csv, Json };

struct RunConfig {
  Command command = Command::Compute;
  std::string family;
  std::string graph_file;
  std::string n_range;
  std::string quantity;
  unsigned t = 1;
  std::string mode = "rubbling";
  bool trivial_group = false;
  Format format = Format::Text;
  std::string output;
  unsigned parallelism = 1;
  bool quiet = false;
  // check
  std::string dist_file;
  std::string cert_file;
  std::string root;
  // verify
  unsigned max_n = 0;
  std::vector<std::string> suites;
  std::vector<unsigned> k;
  bool extended = false;
  std::uint64_t seed = verify::Options{}.seed;
  // enumerate
  std::uint64_t m = 0;
  std::string filter;
};

// Inclusive "a..b", or a single "a".
inline std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    return static_cast<unsigned>(detail::parse_uint(detail::trim(s), 0, "--n"));
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const unsigned v = number(text);
      return {v, v};
    }
    const unsigned a = number(std::string_view(text).substr(0, dots));
    const unsigned b = number(std::string_view(text).substr(dots + 2));
    if (a > b) throw Error("empty range '" + text + "'");
    return {a, b};
  } catch (const ParseError&) {
    throw Error("--n expects 'a..b' or a single integer, got '" + text + "'");
  }
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class Fn>
auto parse_file(const std::string& path, Fn fn) {
  const std::string text = read_file(path);
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

struct Instance {
  Graph graph;
  std::optional<FamilySpec> spec;
};

inline std::vector<Instance> instances(const RunConfig& cfg, bool single) {
  if (cfg.family.empty() == cfg.graph_file.empty())
    throw Error("give exactly one of --family or --graph");
  std::vector<Instance> out;
  if (!cfg.graph_file.empty()) {
    if (!cfg.n_range.empty()) throw Error("--n applies to --family only");
    out.push_back({parse_file(cfg.graph_file, [](const std::string& s) { return parse_graph(s); }),
                   std::nullopt});
    return out;
  }
  if (cfg.n_range.empty()) throw Error("--family needs --n");
  const Family f = parse_family(cfg.family);
  const auto [lo, hi] = parse_range(cfg.n_range);
  if (single && lo != hi) throw Error("this command takes a single --n");
  for (unsigned n = lo; n <= hi; ++n) out.push_back({build_family({f, n}), FamilySpec{f, n}});
  return out;
}

inline PermutationGroup group_for(const RunConfig& cfg, const Instance& inst) {
  if (cfg.trivial_group || !inst.spec) return PermutationGroup::trivial(inst.graph.order());
  return family_group(*inst.spec);
}

inline Vertex parse_vertex(const Graph& g, const std::string& text) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.has_labels() && g.name(v) == text) return v;
  const auto v = rubble::detail::parse_uint(text, 0, "--root");
  if (v >= g.order()) throw Error("root " + text + " is out of range");
  return static_cast<Vertex>(v);
}

// Throttled "orbits scanned" lines on stderr.
class Progress {
 public:
  Progress(std::ostream& err, std::string label, bool enabled)
      : err_(err), label_(std::move(label)), enabled_(enabled),
        last_(std::chrono::steady_clock::now()) {}

  ProgressFn fn() {
    if (!enabled_) return {};
    return [this](std::size_t done, std::size_t total) {
      std::lock_guard lock(mutex_);
      const auto now = std::chrono::steady_clock::now();
      if (now - last_ < std::chrono::seconds(1)) return;
      last_ = now;
      err_ << label_ << ": " << done << "/" << total << " orbits scanned\n" << std::flush;
    };
  }

 private:
  std::ostream& err_;
  std::string label_;
  bool enabled_;
  std::chrono::steady_clock::time_point last_;
  std::mutex mutex_;
};

template <class Fn>
int with_output(const RunConfig& cfg, std::ostream& out, Fn fn) {
  if (cfg.output.empty()) return fn(out);
  std::ofstream file(cfg.output);
  if (!file) throw Error("cannot write '" + cfg.output + "'");
  return fn(static_cast<std::ostream&>(file));
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<ResultRow> compute_rows(const RunConfig& cfg, std::ostream& err,
                                           bool& failed) {
  const QuantityKind kind = parse_quantity(cfg.quantity);
  if (cfg.t < 1) throw Error("--t must be at least 1");
  if (is_optimal(kind) && cfg.t != 1) throw Error("optimal quantities take t = 1 only");
  const Quantity q{kind, cfg.t};
  std::vector<ResultRow> rows;
  for (const auto& inst : detail::instances(cfg, false)) {
    const std::string label =
        inst.spec ? to_string(*inst.spec) : "graph:" + std::to_string(inst.graph.order());
    detail::Progress progress(err, label + " " + cfg.quantity, !cfg.quiet);
    const auto start = std::chrono::steady_clock::now();
    const auto r = verify::compute(inst.graph, q, detail::group_for(cfg, inst),
                                   {cfg.parallelism, progress.fn()});
    const auto elapsed = std::chrono::steady_clock::now() - start;

    ResultRow row;
    row.family = inst.spec ? std::string(family_name(inst.spec->family)) : "graph";
    row.n = inst.spec ? inst.spec->n : static_cast<unsigned>(inst.graph.order());
    row.quantity = cfg.quantity;
    row.t = cfg.t;
    row.mode = std::string(to_string(move_system(kind)));
    row.value = r.value;
    row.witness = r.witness.counts();
    row.witness_root = r.witness_root;
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (inst.spec) {
      try {
        row.formula = closed_form(*inst.spec, q);
        row.match = *row.formula == r.value;
        if (!*row.match) failed = true;
      } catch (const NoFormula&) {
      }
    }
    if (auto problem = verify::witness_problem(inst.graph, q, r); !problem.empty()) {
      err << "error: " << label << ": " << problem << "\n";
      failed = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool failed = false;
  const auto rows = compute_rows(cfg, err, failed);
  detail::with_output(cfg, out, [&](std::ostream& o) {
    switch (cfg.format) {
      case Format::Text: write_rows_text(o, rows); break;
      case Format::Csv: write_rows_csv(o, rows); break;
      case Format::Json: write_rows_json(o, rows); break;
    }
    return 0;
  });
  return failed ? kExitMismatch : kExitOk;
}

inline int run_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto inst = detail::instances(cfg, true).front();
  const Graph& g = inst.graph;
  const MoveSystem mode = parse_move_system(cfg.mode);
  if (cfg.dist_file.empty() && cfg.cert_file.empty()) throw Error("check needs --dist or --cert");
  if (cfg.t < 1) throw Error("--t must be at least 1");
  int status = kExitOk;
  if (!cfg.dist_file.empty()) {
    const auto d = detail::parse_file(
        cfg.dist_file, [&](const std::string& s) { return parse_distribution(s, g.order()); });
    Solver solver(g);
    const auto failing = solver.first_unsolved_root(d, mode);
    out << "solvable: " << (failing ? "false" : "true") << "\n";
    if (failing) out << "unreachable root: " << g.name(*failing) << "\n";
    if (!cfg.root.empty()) {
      const Vertex r = detail::parse_vertex(g, cfg.root);
      out << "reachable(" << g.name(r) << ", t=" << cfg.t
          << "): " << (solver.is_reachable(d, r, cfg.t, mode) ? "true" : "false") << "\n";
    }
  }
  if (!cfg.cert_file.empty()) {
    const auto c = detail::parse_file(cfg.cert_file,
                                      [](const std::string& s) { return parse_certificate(s); });
    const auto rep = verify_certificate(g, c, mode);
    out << "valid: " << (rep.valid ? "true" : "false")
        << ", acyclic: " << (rep.acyclic ? "true" : "false") << "\n";
    out << "final root count: " << rep.final_root_count << "\n";
    if (!rep.valid) {
      out << "reason: " << rep.reason << "\n";
      status = kExitMismatch;
    }
  }
  return status;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  verify::Options o;
  o.max_n = cfg.max_n;
  o.extended = cfg.extended;
  o.workers = cfg.parallelism;
  o.seed = cfg.seed;
  if (!cfg.k.empty()) o.lempath_k = cfg.k;
  for (unsigned k : o.lempath_k)
    if (k < 1) throw Error("--k must be positive");
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end())
    suites = verify::suite_names();
  for (const auto& s : suites)
    if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) ==
        verify::suite_names().end())
      throw Error("unknown suite '" + s + "'");

  return detail::with_output(cfg, out, [&](std::ostream& o_stream) {
    verify::Report report([&](const verify::Check& c) {
      o_stream << (c.passed ? "PASS " : "FAIL ") << c.suite << " " << c.name << ": " << c.detail
               << "\n"
               << std::flush;
    });
    for (const auto& s : suites) {
      if (!cfg.quiet) err << "running suite " << s << "\n" << std::flush;
      verify::run_suite(s, o, report);
    }
    std::size_t failed = 0;
    for (const auto& c : report.checks()) failed += !c.passed;
    o_stream << report.checks().size() << " checks, " << failed << " failed\n";
    if (failed) {
      for (const auto& c : report.checks())
        if (!c.passed) err << "mismatch: " << c.suite << " " << c.name << "\n";
    }
    return failed ? kExitMismatch : kExitOk;
  });
}

inline int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto inst = detail::instances(cfg, true).front();
  const auto group = detail::group_for(cfg, inst);
  const MoveSystem mode = parse_move_system(cfg.mode);
  if (!cfg.filter.empty() && cfg.filter != "solvable" && cfg.filter != "unsolvable")
    throw Error("--filter must be solvable or unsolvable");
  Solver solver(inst.graph);
  std::size_t count = 0;
  detail::with_output(cfg, out, [&](std::ostream& o) {
    for_each_distribution(inst.graph.order(), cfg.m, group, [&](const Distribution& d) {
      if (!cfg.filter.empty() && solver.solvable(d, mode) != (cfg.filter == "solvable")) return;
      o << format_distribution(d) << "\n";
      ++count;
    });
    return 0;
  });
  if (!cfg.quiet) err << count << " distributions\n";
  return kExitOk;
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Compute: return run_compute(cfg, out, err);
    case Command::Check: return run_check(cfg, out, err);
    case Command::Verify: return run_verify(cfg, out, err);
    case Command::Enumerate: return run_enumerate(cfg, out, err);
  }
  return kExitUsage;
}

// ---------------------------------------------------------------------------

// `args` excludes the program name.
inline int main_entry(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph pebbling and rubbling numbers", "rubble"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto graph_options = [&](CLI::App* sub) {
    auto* fam = sub->add_option("--family", cfg.family,
                                "path, cycle, ladder, prism, mobius or h");
    auto* file = sub->add_option("--graph", cfg.graph_file, "graph file");
    fam->excludes(file);
    sub->add_option("--n", cfg.n_range, "family parameter, or a range a..b for compute");
  };
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  std::string group = "family";
  auto group_option = [&](CLI::App* sub) {
    sub->add_option("--group", group, "symmetry group used to prune the scan")
        ->check(CLI::IsMember({"family", "trivial"}));
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "write results to this file");
    sub->add_option("--parallelism", cfg.parallelism, "worker threads")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--quiet", cfg.quiet, "no progress on stderr");
  };

  auto* compute = app.add_subcommand("compute", "compute pebbling and rubbling numbers");
  graph_options(compute);
  compute->add_option("--quantity", cfg.quantity, "pebbling, rubbling, opt-pebbling, opt-rubbling")
      ->required()
      ->check(CLI::IsMember({"pebbling", "rubbling", "opt-pebbling", "opt-rubbling"}));
  compute->add_option("--t", cfg.t, "target pebble count for pebbling and rubbling");
  group_option(compute);
  compute->add_option("--format", cfg.format, "text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("{text,csv,json}");
  common(compute);

  auto* check = app.add_subcommand("check", "decide solvability or verify a certificate");
  graph_options(check);
  check->add_option("--dist", cfg.dist_file, "distribution file");
  check->add_option("--cert", cfg.cert_file, "certificate file (JSON)");
  check->add_option("--mode", cfg.mode, "rubbling or pebbling")
      ->check(CLI::IsMember({"rubbling", "pebbling"}));
  check->add_option("--root", cfg.root, "root vertex, by index or label");
  check->add_option("--t", cfg.t, "target pebble count at the root");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--max-n", cfg.max_n, "cap on the family parameter");
  verify->add_option("--suite", cfg.suites,
                     "formulas, lempath, reduction, properties, constructions or all");
  verify->add_option("--k", cfg.k, "lempath parameters");
  verify->add_flag("--extended", cfg.extended, "include rubbling on C_8");
  verify->add_option("--seed", cfg.seed, "seed for the randomized properties");
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "list distributions up to symmetry");
  graph_options(enumerate);
  enumerate->add_option("--m", cfg.m, "number of pebbles")->required();
  group_option(enumerate);
  enumerate->add_option("--filter", cfg.filter, "solvable or unsolvable")
      ->check(CLI::IsMember({"solvable", "unsolvable"}));
  enumerate->add_option("--mode", cfg.mode, "rubbling or pebbling")
      ->check(CLI::IsMember({"rubbling", "pebbling"}));
  common(enumerate);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.trivial_group = group == "trivial";
  if (compute->parsed()) cfg.command = Command::Compute;
  else if (check->parsed()) cfg.command = Command::Check;
  else if (verify->parsed()) cfg.command = Command::Verify;
  else cfg.command = Command::Enumerate;

  try {
    return run(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoFormula& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace rubble::cli
