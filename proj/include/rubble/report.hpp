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
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rubble/error.hpp"
#include "rubble/io.hpp"

namespace rubble {

// One computed number, as emitted by `compute`.
struct ResultRow {
  std::string family;  // family name, or "graph" for a graph file
  unsigned n = 0;      // family parameter, or vertex count for a graph file
  std::string quantity;
  unsigned t = 1;
  std::string mode;
  std::uint64_t value = 0;
  std::optional<std::uint64_t> formula;
  std::optional<bool> match;
  std::vector<Count> witness;
  std::optional<Vertex> witness_root;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline const std::vector<std::string>& row_columns() {
  static const std::vector<std::string> cols{"family", "n",       "quantity",     "t",
                                             "mode",   "value",   "formula",      "match",
                                             "witness", "witness_root", "elapsed_ms"};
  return cols;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json row_to_json(const ResultRow& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["quantity"] = r.quantity;
  j["t"] = r.t;
  j["mode"] = r.mode;
  j["value"] = r.value;
  j["formula"] = r.formula ? nlohmann::json(*r.formula) : nlohmann::json(nullptr);
  j["match"] = r.match ? nlohmann::json(*r.match) : nlohmann::json(nullptr);
  j["witness"] = r.witness;
  j["witness_root"] = r.witness_root ? nlohmann::json(*r.witness_root) : nlohmann::json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline ResultRow row_from_json(const nlohmann::json& j) {
  try {
    ResultRow r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<unsigned>();
    r.quantity = j.at("quantity").get<std::string>();
    r.t = j.at("t").get<unsigned>();
    r.mode = j.at("mode").get<std::string>();
    r.value = j.at("value").get<std::uint64_t>();
    if (!j.at("formula").is_null()) r.formula = j.at("formula").get<std::uint64_t>();
    if (!j.at("match").is_null()) r.match = j.at("match").get<bool>();
    r.witness = j.at("witness").get<std::vector<Count>>();
    if (j.contains("witness_root") && !j.at("witness_root").is_null())
      r.witness_root = j.at("witness_root").get<Vertex>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad result row: ") + e.what());
  }
}

inline void write_rows_json(std::ostream& out, const std::vector<ResultRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  out << arr.dump(2) << '\n';
}

inline std::vector<ResultRow> read_rows_json(std::istream& in) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!arr.is_array()) throw ParseError(0, "expected a JSON array of rows");
  std::vector<ResultRow> rows;
  for (const auto& j : arr) rows.push_back(row_from_json(j));
  return rows;
}

// ---------------------------------------------------------------------------
// CSV. No field ever contains a comma; the witness is space separated.

inline void write_rows_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  const auto& cols = row_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.quantity << ',' << r.t << ',' << r.mode << ','
        << r.value << ',' << (r.formula ? std::to_string(*r.formula) : "") << ','
        << (r.match ? (*r.match ? "true" : "false") : "") << ','
        << format_distribution(Distribution(r.witness)) << ','
        << (r.witness_root ? std::to_string(*r.witness_root) : "") << ',' << r.elapsed_ms
        << '\n';
  }
}

inline std::vector<ResultRow> read_rows_csv(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<ResultRow> rows;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    if (fields.size() != row_columns().size())
      throw ParseError(line_no, "expected " + std::to_string(row_columns().size()) +
                                    " fields, got " + std::to_string(fields.size()));
    if (!header) {
      if (fields != row_columns()) throw ParseError(line_no, "unexpected CSV header");
      header = true;
      continue;
    }
    auto num = [&](const std::string& s, const char* what) {
      return detail::parse_uint(s, line_no, what);
    };
    ResultRow r;
    r.family = fields[0];
    r.n = static_cast<unsigned>(num(fields[1], "n"));
    r.quantity = fields[2];
    r.t = static_cast<unsigned>(num(fields[3], "t"));
    r.mode = fields[4];
    r.value = num(fields[5], "value");
    if (!fields[6].empty()) r.formula = num(fields[6], "formula");
    if (fields[7] == "true") r.match = true;
    else if (fields[7] == "false") r.match = false;
    else if (!fields[7].empty()) throw ParseError(line_no, "match must be true, false or empty");
    for (auto tok : detail::split_ws(fields[8]))
      r.witness.push_back(static_cast<Count>(num(std::string(tok), "witness count")));
    if (!fields[9].empty()) r.witness_root = static_cast<Vertex>(num(fields[9], "witness_root"));
    try {
      r.elapsed_ms = std::stoll(fields[10]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad elapsed_ms");
    }
    rows.push_back(std::move(r));
  }
  if (!header) throw ParseError(line_no, "missing CSV header");
  return rows;
}

// ---------------------------------------------------------------------------
// Plain text

inline void write_rows_text(std::ostream& out, const std::vector<ResultRow>& rows) {
  for (const auto& r : rows) {
    out << r.family << ' ' << std::setw(2) << r.n << "  " << r.quantity;
    if (r.quantity == "pebbling" || r.quantity == "rubbling") out << " t=" << r.t;
    out << "  value=" << r.value;
    if (r.formula) out << "  formula=" << *r.formula << (r.match.value_or(false) ? "  ok" : "  MISMATCH");
    out << "  witness=(" << format_distribution(Distribution(r.witness)) << ")";
    if (r.witness_root) out << " root=" << *r.witness_root;
    out << "  " << r.elapsed_ms << "ms\n";
  }
}

}  // namespace rubble
