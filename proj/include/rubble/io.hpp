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

// Text formats:
//
//   graph         "n m", then m lines "u v" (0-based), then optional
//                 "# i name" label lines
//   distribution  one line of n nonnegative integers, optionally wrapped
//                 in parentheses; commas count as separators
//   certificate   JSON {"initial": [..], "root": r, "t": t,
//                       "moves": [{"kind": "pebbling"|"strict-rubbling",
//                                  "sources": [..], "target": u}, ..]}

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rubble/certificate.hpp"
#include "rubble/distribution.hpp"
#include "rubble/error.hpp"
#include "rubble/graph.hpp"

namespace rubble {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  return value;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool any_label = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!header) throw ParseError(line_no, "label line before the 'n m' header");
      auto rest = detail::trim(line.substr(1));
      auto space = rest.find_first_of(" \t");
      if (space == std::string_view::npos) throw ParseError(line_no, "label line needs '# i name'");
      auto index = detail::parse_uint(rest.substr(0, space), line_no, "vertex index");
      if (index >= header->first) throw ParseError(line_no, "label for vertex out of range");
      labels[index] = std::string(detail::trim(rest.substr(space)));
      any_label = true;
      continue;
    }
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                    " token(s)");
    if (!header) {
      header = {detail::parse_uint(tokens[0], line_no, "n"),
                detail::parse_uint(tokens[1], line_no, "m")};
      if (header->first == 0) throw ParseError(line_no, "graph needs at least one vertex");
      if (header->first > 100000) throw ParseError(line_no, "vertex count too large");
      labels.resize(header->first);
      continue;
    }
    if (any_label) throw ParseError(line_no, "edge line after label lines");
    if (edges.size() == header->second)
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(header->second));
    auto a = detail::parse_uint(tokens[0], line_no, "endpoint");
    auto b = detail::parse_uint(tokens[1], line_no, "endpoint");
    if (a >= header->first || b >= header->first)
      throw ParseError(line_no, "edge endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != header->second)
    throw ParseError(line_no, "declared " + std::to_string(header->second) + " edges, found " +
                                  std::to_string(edges.size()));
  if (any_label) {
    for (std::size_t v = 0; v < labels.size(); ++v)
      if (labels[v].empty()) labels[v] = std::to_string(v);
  } else {
    labels.clear();
  }
  try {
    return Graph(header->first, std::move(edges), std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.order(); ++v) out << "# " << v << ' ' << g.name(v) << '\n';
}

// `expected_order` of 0 accepts any length.
inline Distribution read_distribution(std::istream& in, std::size_t expected_order = 0) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Distribution> result;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (result) throw ParseError(line_no, "distribution must be a single line");
    if (line.front() == '(') {
      if (line.back() != ')') throw ParseError(line_no, "unbalanced parenthesis");
      line = detail::trim(line.substr(1, line.size() - 2));
    }
    std::string spaced(line);
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::vector<Count> counts;
    for (auto token : detail::split_ws(spaced)) {
      auto v = detail::parse_uint(token, line_no, "pebble count");
      if (v > 0xffffffffu) throw ParseError(line_no, "pebble count too large");
      counts.push_back(static_cast<Count>(v));
    }
    if (counts.empty()) throw ParseError(line_no, "empty distribution");
    if (expected_order && counts.size() != expected_order)
      throw ParseError(line_no, "expected " + std::to_string(expected_order) + " counts, got " +
                                    std::to_string(counts.size()));
    result = Distribution(std::move(counts));
  }
  if (!result) throw ParseError(line_no, "missing distribution line");
  return *result;
}

inline Distribution parse_distribution(std::string_view text, std::size_t expected_order = 0) {
  std::istringstream in{std::string(text)};
  return read_distribution(in, expected_order);
}

inline std::string format_distribution(const Distribution& d) {
  std::string out;
  for (std::size_t v = 0; v < d.order(); ++v) {
    if (v) out += ' ';
    out += std::to_string(d[static_cast<Vertex>(v)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

inline nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& m : c.moves) {
    nlohmann::json sources = m.kind == MoveKind::Pebbling
                                 ? nlohmann::json::array({m.first})
                                 : nlohmann::json::array({m.first, m.second});
    moves.push_back({{"kind", m.kind == MoveKind::Pebbling ? "pebbling" : "strict-rubbling"},
                     {"sources", sources},
                     {"target", m.target}});
  }
  return {{"initial", c.initial.counts()}, {"root", c.root}, {"t", c.t}, {"moves", moves}};
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  auto need = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
    if (!obj.is_object() || !obj.contains(key))
      throw ParseError(0, std::string("certificate is missing field '") + key + "'");
    return obj.at(key);
  };
  auto vertex = [](const nlohmann::json& v, const char* what) {
    if (!v.is_number_unsigned()) throw ParseError(0, std::string(what) + " must be an index");
    return v.get<Vertex>();
  };
  Certificate c;
  const auto& initial = need(j, "initial");
  if (!initial.is_array()) throw ParseError(0, "'initial' must be an array");
  std::vector<Count> counts;
  for (const auto& x : initial) {
    if (!x.is_number_unsigned()) throw ParseError(0, "'initial' entries must be nonnegative");
    counts.push_back(x.get<Count>());
  }
  c.initial = Distribution(std::move(counts));
  c.root = vertex(need(j, "root"), "'root'");
  const auto& t = need(j, "t");
  if (!t.is_number_unsigned() || t.get<unsigned>() == 0)
    throw ParseError(0, "'t' must be a positive integer");
  c.t = t.get<unsigned>();
  const auto& moves = need(j, "moves");
  if (!moves.is_array()) throw ParseError(0, "'moves' must be an array");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& m = moves[i];
    const auto kind = need(m, "kind");
    const auto& sources = need(m, "sources");
    const Vertex target = vertex(need(m, "target"), "'target'");
    if (!kind.is_string() || !sources.is_array())
      throw ParseError(0, "move " + std::to_string(i) + " is malformed");
    if (kind == "pebbling") {
      if (sources.size() != 1 && !(sources.size() == 2 && sources[0] == sources[1]))
        throw ParseError(0, "pebbling move " + std::to_string(i) + " needs one source");
      c.moves.push_back(Move::pebbling(vertex(sources[0], "source"), target));
    } else if (kind == "strict-rubbling") {
      if (sources.size() != 2)
        throw ParseError(0, "strict rubbling move " + std::to_string(i) + " needs two sources");
      // Keep the raw pair so verification can flag equal sources.
      Vertex a = vertex(sources[0], "source"), b = vertex(sources[1], "source");
      c.moves.push_back({MoveKind::StrictRubbling, std::min(a, b), std::max(a, b), target});
    } else {
      throw ParseError(0, "move " + std::to_string(i) + " has unknown kind");
    }
  }
  return c;
}

inline Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace rubble
