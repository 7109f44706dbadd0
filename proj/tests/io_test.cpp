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

#include <random>
#include <sstream>

#include "rubble/io.hpp"
#include "rubble/report.hpp"
#include "rubble/solver.hpp"
#include "rubble/verify.hpp"

namespace rubble {
namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(GraphFormatTest, ReadsEdgesAndLabels) {
  const Graph g = parse_graph("3 2\n0 1\n1 2\n# 0 left\n# 2 right\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.name(0), "left");
  EXPECT_EQ(g.name(1), "1");
  EXPECT_EQ(g.name(2), "right");
}

TEST(GraphFormatTest, RoundTrip) {
  for (Family f : {Family::Ladder, Family::Mobius, Family::H}) {
    const Graph g = build_family({f, 4});
    std::ostringstream out;
    write_graph(out, g);
    const Graph back = parse_graph(out.str());
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.name(3), g.name(3));
  }
}

TEST(GraphFormatTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 2 3\n"), 3u);
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(parse_error_line("\n\n3\n"), 3u);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 5\n"), 3u);
  EXPECT_EQ(parse_error_line("# 0 a\n"), 1u);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n"), ParseError);  // disconnected
  EXPECT_THROW(parse_graph("2 1\n0 0\n"), ParseError);  // loop
}

TEST(DistributionFormatTest, Parses) {
  EXPECT_EQ(parse_distribution("1 0 1\n"), (Distribution{1, 0, 1}));
  EXPECT_EQ(parse_distribution("\n( 1 0 1 )\n\n"), (Distribution{1, 0, 1}));
  EXPECT_EQ(parse_distribution("(2 3)", 2), (Distribution{2, 3}));
  EXPECT_EQ(parse_distribution("(1,0,1)"), (Distribution{1, 0, 1}));
  EXPECT_EQ(parse_distribution("4, 0"), (Distribution{4, 0}));
  const Distribution d{3, 0, 2, 7};
  EXPECT_EQ(parse_distribution(to_string(d)), d);
  EXPECT_EQ(format_distribution(Distribution{0, 2, 0}), "0 2 0");
}

TEST(DistributionFormatTest, Errors) {
  EXPECT_THROW(parse_distribution("1 -1 0"), ParseError);
  EXPECT_THROW(parse_distribution("1 0", 3), ParseError);
  EXPECT_THROW(parse_distribution("(1 0"), ParseError);
  EXPECT_THROW(parse_distribution("1 0\n1 0"), ParseError);
  EXPECT_THROW(parse_distribution(""), ParseError);
  try {
    parse_distribution("\n\n1 a 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(CertificateFormatTest, Shape) {
  const Certificate c{Distribution{1, 1, 1}, {Move::strict(0, 1, 2), Move::pebbling(2, 0)}, 0, 1};
  const auto j = certificate_to_json(c);
  EXPECT_EQ(j["moves"][0]["kind"], "strict-rubbling");
  EXPECT_EQ(j["moves"][0]["sources"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["moves"][1]["kind"], "pebbling");
  EXPECT_EQ(j["moves"][1]["sources"], nlohmann::json::array({2}));
  EXPECT_EQ(certificate_from_json(j), c);
}

TEST(CertificateFormatTest, SolverCertificatesRoundTrip) {
  std::mt19937_64 rng(17);
  Solver solver(build_family({Family::Ladder, 4}));
  const Graph& g = solver.graph();
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const Distribution d = verify::detail::random_distribution(rng, g.order(), 2 + i % 8);
    const Vertex root = static_cast<Vertex>(i % g.order());
    const auto dec = solver.reachable({d, root, 1 + static_cast<unsigned>(i % 2),
                                       i % 3 ? MoveSystem::Rubbling : MoveSystem::PebblingOnly});
    if (!dec.reachable) continue;
    ++found;
    const auto text = certificate_to_json(*dec.certificate).dump();
    EXPECT_EQ(parse_certificate(text), *dec.certificate);
  }
  EXPECT_GT(found, 50);
}

TEST(CertificateFormatTest, Errors) {
  EXPECT_THROW(parse_certificate("{"), ParseError);
  EXPECT_THROW(parse_certificate(R"({"initial":[1],"root":0,"t":1})"), ParseError);
  EXPECT_THROW(parse_certificate(R"({"initial":[1],"root":0,"t":0,"moves":[]})"), ParseError);
  EXPECT_THROW(parse_certificate(
                   R"({"initial":[1,0],"root":0,"t":1,"moves":[{"kind":"jump","sources":[0],"target":1}]})"),
               ParseError);
  EXPECT_THROW(parse_certificate(
                   R"({"initial":[1,0],"root":0,"t":1,"moves":[{"kind":"strict-rubbling","sources":[0],"target":1}]})"),
               ParseError);
}

TEST(CertificateFormatTest, EqualStrictSourcesAreCaughtByVerification) {
  const Graph g = build_family({Family::Path, 3});
  const auto c = parse_certificate(
      R"({"initial":[2,0,0],"root":1,"t":1,"moves":[{"kind":"strict-rubbling","sources":[0,0],"target":1}]})");
  const auto r = verify_certificate(g, c);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.first_illegal_move, std::optional<std::size_t>(0));
}

std::vector<ResultRow> sample_rows() {
  ResultRow a;
  a.family = "cycle";
  a.n = 4;
  a.quantity = "rubbling";
  a.t = 1;
  a.mode = "rubbling";
  a.value = 4;
  a.formula = 4;
  a.match = true;
  a.witness = {0, 0, 0, 3};
  a.witness_root = 1;
  a.elapsed_ms = 12;
  ResultRow b;
  b.family = "graph";
  b.n = 5;
  b.quantity = "opt-pebbling";
  b.mode = "pebbling";
  b.value = 3;
  b.witness = {0, 2, 0, 0, 1};
  ResultRow c = a;
  c.match = false;
  c.formula = 5;
  return {a, b, c};
}

TEST(ReportTest, CsvRoundTrip) {
  const auto rows = sample_rows();
  std::stringstream s;
  write_rows_csv(s, rows);
  EXPECT_EQ(read_rows_csv(s), rows);
}

TEST(ReportTest, JsonRoundTrip) {
  const auto rows = sample_rows();
  std::stringstream s;
  write_rows_json(s, rows);
  EXPECT_EQ(read_rows_json(s), rows);
}

TEST(ReportTest, MalformedCsv) {
  std::stringstream missing("cycle,4\n");
  EXPECT_THROW(read_rows_csv(missing), ParseError);
  std::stringstream bad;
  write_rows_csv(bad, {});
  bad << "cycle,x,rubbling,1,rubbling,4,,,0 0,,0\n";
  try {
    read_rows_csv(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace rubble
