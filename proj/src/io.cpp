// Copyright 2026 The Authors.
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

#include "matroidkit/io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "matroidkit/error.hpp"

namespace matroidkit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_format(const Json& doc, std::string_view tag) {
  if (!doc.is_object()) throw Error("expected a JSON object");
  const Json& format = field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != tag) {
    throw Error("expected format \"" + std::string(tag) + "\"");
  }
}

std::int64_t integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::size_t count(const Json& v, const char* what) {
  const std::int64_t k = integer(v, what);
  if (k < 0) throw Error(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(k);
}

const Json& array(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(std::string(what) + " must be an array");
  return v;
}

std::string matrix_entry(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error("matrix entries must be integers or rational strings");
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long v = 0, m = 0;
  if (!(in >> v >> m) || v < 0 || m < 0) throw Error("graph text must start with \"v m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long a = 0, b = 0;
    if (!(in >> a >> b)) throw Error("graph text has fewer than " + std::to_string(m) + " edges");
    if (a < 0 || b < 0 || a >= v || b >= v) throw Error("edge endpoint out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  std::string rest;
  if (in >> rest) throw Error("unexpected text after the last edge");
  return Graph(static_cast<std::size_t>(v), edges);
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  const Json doc = parse_json(text);
  expect_format(doc, "matroid-v1");
  const std::size_t n = count(field(doc, "n"), "n");
  std::optional<Labels> labels;
  if (auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
    Labels l;
    for (const Json& s : array(*it, "labels")) {
      if (!s.is_string()) throw Error("labels must be strings");
      l.push_back(s.get<std::string>());
    }
    labels = std::move(l);
  }
  std::vector<std::vector<int>> bases;
  for (const Json& b : array(field(doc, "bases"), "bases")) {
    std::vector<int> basis;
    for (const Json& e : array(b, "basis")) {
      const std::int64_t i = integer(e, "basis element");
      if (i < 0 || static_cast<std::size_t>(i) >= n) throw Error("basis element out of range");
      basis.push_back(static_cast<int>(i));
    }
    bases.push_back(std::move(basis));
  }
  return make_matroid(n, std::move(labels), bases);
}

std::string render_matroid(const Matroid& m) {
  Json doc;
  doc["format"] = "matroid-v1";
  doc["n"] = m.size();
  if (m.labels()) doc["labels"] = *m.labels();
  Json bases = Json::array();
  for (GroundSubset b : m.bases()) bases.push_back(b.elements());
  doc["bases"] = std::move(bases);
  return doc.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size() || text[i] != '{') return parse_graph_text(text);
  const Json doc = parse_json(text);
  expect_format(doc, "graph-v1");
  const std::size_t v = count(field(doc, "v"), "v");
  std::vector<Edge> edges;
  for (const Json& e : array(field(doc, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair");
    const std::int64_t a = integer(e[0], "edge endpoint");
    const std::int64_t b = integer(e[1], "edge endpoint");
    if (a < 0 || b < 0) throw Error("edge endpoint out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Graph(v, edges);
}

std::string render_graph(const Graph& g) {
  Json doc;
  doc["format"] = "graph-v1";
  doc["v"] = g.vertex_count();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string render_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

ExactMatrix parse_matrix(std::string_view text, const Field& f) {
  const Json doc = parse_json(text);
  expect_format(doc, "matrix-v1");
  const std::size_t rows = count(field(doc, "rows"), "rows");
  const std::size_t cols = count(field(doc, "cols"), "cols");
  const Json& entries = array(field(doc, "entries"), "entries");
  if (entries.size() != rows) throw Error("entries must have one array per row");
  std::vector<Rational> values;
  values.reserve(rows * cols);
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw Error("each row must have " + std::to_string(cols) + " entries");
    }
    for (const Json& e : row) values.push_back(parse_rational(matrix_entry(e)));
  }
  return ExactMatrix(f, rows, cols, values);
}

std::string render_matrix(const ExactMatrix& a) {
  Json doc;
  doc["format"] = "matrix-v1";
  doc["rows"] = a.rows();
  doc["cols"] = a.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.entry_string(r, c));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

std::string read_input(const std::string& path, std::istream& standard_input) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(standard_input),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace matroidkit
