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

#include "matroidkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidkit/algebra.hpp"
#include "matroidkit/construct.hpp"
#include "matroidkit/error.hpp"
#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/graph.hpp"
#include "matroidkit/io.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/optimize.hpp"
#include "matroidkit/search.hpp"
#include "matroidkit/transform.hpp"
#include "matroidkit/tutte.hpp"

namespace matroidkit {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool pretty = false;
  std::string file;
  std::string second;
  std::string set;
  std::string contract;
  std::string remove;
  std::string x = "1";
  std::string y = "1";
  std::string weights;
  std::optional<int> degree;
  bool presentation = false;
  bool exact = false;
  std::string method = "full";
  int rank = 0;
  int n = 0;
  std::string field = "q";
  std::string name;
};

// "3,5,8" -> {3,5,8}; the empty string is the empty set.
GroundSubset parse_set(const std::string& text, std::size_t n) {
  GroundSubset s;
  if (text.empty()) return s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed element list '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed element list '" + text + "'");
    if (e < 0 || static_cast<std::size_t>(e) >= n) {
      throw Error("element " + item + " outside the ground set of size " + std::to_string(n));
    }
    s = s.with(static_cast<int>(e));
  }
  return s;
}

std::string comma_list(GroundSubset s) {
  std::string out;
  s.for_each([&](int e) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  });
  return out;
}

BigInt parse_integer_option(const std::string& text, const char* what) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be an integer");
  }
  if (boost::multiprecision::denominator(q) != 1) {
    throw UsageError(std::string(what) + " must be an integer");
  }
  return boost::multiprecision::numerator(q);
}

Field parse_field(const std::string& text) {
  if (text == "q") return Field::rationals();
  if (text.rfind("p:", 0) == 0) {
    const std::string digits = text.substr(2);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) &&
        digits.size() <= 19) {
      return Field::prime(std::stoull(digits));
    }
  }
  throw UsageError("field must be 'q' or 'p:<prime>'");
}

std::string shell_quote(const std::string& s) {
  const bool safe = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '.' ||
           c == '_' || c == '-' || c == '+' || c == ',' || c == ':';
  });
  if (safe) return s;
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

// Pretty rendering helpers.

std::string labelled(const Matroid& m, GroundSubset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ", ";
    out += m.label(e);
    first = false;
  });
  return out + "}";
}

std::string index_list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string describe(const Matroid& m) {
  std::string out = "ground set (n = " + std::to_string(m.size()) +
                    ", rank " + std::to_string(m.rank()) + "):";
  for (std::size_t i = 0; i < m.size(); ++i) out += " " + m.label(static_cast<int>(i));
  out += "\nbases (" + std::to_string(m.basis_count()) + "):";
  for (GroundSubset b : m.bases()) out += "\n  " + labelled(m, b);
  return out;
}

std::string set_lines(const Matroid& m, const std::vector<GroundSubset>& sets) {
  std::string out;
  for (GroundSubset s : sets) {
    if (!out.empty()) out += "\n";
    out += labelled(m, s);
  }
  return out;
}

Json set_list(const std::vector<GroundSubset>& sets) {
  Json out = Json::array();
  for (GroundSubset s : sets) out.push_back(s.elements());
  return out;
}

std::string strip_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

class Runner {
 public:
  Runner(const Options& opts, std::istream& in, std::ostream& out)
      : opts_(opts), in_(in), out_(out) {}

  void validate() { emit_text(is_valid(matroid()) ? "true" : "false"); }

  void info() {
    const Matroid m = matroid();
    const auto fv = fvector(m);
    Json doc;
    doc["n"] = m.size();
    doc["rank"] = m.rank();
    doc["bases"] = m.basis_count();
    doc["loops"] = loops(m).elements();
    doc["coloops"] = coloops(m).elements();
    doc["fvector"] = fv;
    std::string text = "n        " + std::to_string(m.size()) +
                       "\nrank     " + std::to_string(m.rank()) +
                       "\nbases    " + std::to_string(m.basis_count()) +
                       "\nloops    " + labelled(m, loops(m)) +
                       "\ncoloops  " + labelled(m, coloops(m)) + "\nfvector ";
    for (std::size_t k : fv) text += " " + std::to_string(k);
    emit(doc, text);
  }

  void bases() {
    const Matroid m = matroid();
    const std::vector<GroundSubset> b(m.bases().begin(), m.bases().end());
    emit(set_list(b), set_lines(m, b));
  }

  void circuits_cmd() {
    const Matroid m = matroid();
    emit(set_list(m.circuits()), set_lines(m, m.circuits()));
  }

  void flats_cmd() {
    const Matroid m = matroid();
    Json doc = Json::array();
    std::string text;
    for (std::size_t k = 0; k < m.flats().size(); ++k) {
      doc.push_back(set_list(m.flats()[k]));
      if (k) text += "\n";
      text += "rank " + std::to_string(k) + ":";
      for (GroundSubset f : m.flats()[k]) text += " " + labelled(m, f);
    }
    emit(doc, text);
  }

  void hyperplanes_cmd() {
    const Matroid m = matroid();
    const auto h = hyperplanes(m);
    emit(set_list(h), set_lines(m, h));
  }

  void dual_cmd() { emit_matroid(dual(matroid())); }

  void delete_cmd() {
    const Matroid m = matroid();
    emit_matroid(deletion(m, parse_set(opts_.set, m.size())));
  }

  void contract_cmd() {
    const Matroid m = matroid();
    emit_matroid(contraction(m, parse_set(opts_.set, m.size())));
  }

  void minor_cmd() {
    const Matroid m = matroid();
    emit_matroid(minor(m, parse_set(opts_.contract, m.size()), parse_set(opts_.remove, m.size())));
  }

  void isomorphic() {
    const Matroid a = matroid();
    const Matroid b = parse_matroid(read_input(opts_.second, in_));
    const auto iso = isomorphism(a, b);
    Json doc;
    doc["isomorphic"] = iso.has_value();
    std::string text = "not isomorphic";
    if (iso) {
      doc["permutation"] = iso->perm;
      text = iso->equal ? "matroids are equal" : "isomorphism: " + index_list(iso->perm);
    }
    emit(doc, text);
  }

  void has_minor_cmd() {
    const Matroid m = matroid();
    const Matroid n = parse_matroid(read_input(opts_.second, in_));
    const auto w = has_minor(m, n);
    Json doc;
    doc["has_minor"] = w.has_value();
    std::string text = "no minor found";
    if (w) {
      doc["contract"] = w->contract.elements();
      doc["delete"] = w->remove.elements();
      doc["permutation"] = w->iso.perm;
      std::string replay = "matroidkit minor " + shell_quote(opts_.file);
      if (!w->contract.empty()) replay += " --contract " + comma_list(w->contract);
      if (!w->remove.empty()) replay += " --delete " + comma_list(w->remove);
      replay += " | matroidkit isomorphic - " + shell_quote(opts_.second);
      doc["replay"] = replay;
      text = "contract set " + labelled(m, w->contract) + ", delete set " +
             labelled(m, w->remove) + "\nisomorphism: " + index_list(w->iso.perm);
    }
    emit(doc, text);
  }

  void tutte() {
    const BivarPoly t = tutte_polynomial(matroid());
    std::vector<std::pair<BivarPoly::Exponents, BigInt>> terms(t.terms().begin(),
                                                               t.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      const int da = a.first.first + a.first.second;
      const int db = b.first.first + b.first.second;
      return da != db ? da > db : a.first.first > b.first.first;
    });
    std::string json = "{\"terms\":[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) json += ",";
      json += "[" + std::to_string(terms[i].first.first) + "," +
              std::to_string(terms[i].first.second) + "," + terms[i].second.str() + "]";
    }
    emit_text(json + "]}", t.to_string());
  }

  void tutte_eval() {
    const BigInt x = parse_integer_option(opts_.x, "--x");
    const BigInt y = parse_integer_option(opts_.y, "--y");
    emit_text(tutte_evaluate(matroid(), x, y).str());
  }

  void chromatic() {
    const UniPoly p = chromatic_polynomial(graph());
    std::string json = "{\"coefficients\":[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i) json += ",";
      json += p.coeffs()[i].str();
    }
    json += "],\"factored\":" + Json(p.factored()).dump() + "}";
    emit_text(json, "P(k) = " + p.factored() + "\n     = " + p.to_string());
  }

  void cycles() {
    const Graph g = graph();
    const auto all = get_cycles(g);
    Json list = Json::array();
    std::string text = std::to_string(all.size()) + " cycles";
    for (const Cycle& c : all) {
      Json item;
      item["edges"] = c.edges.elements();
      item["vertices"] = c.vertices;
      list.push_back(std::move(item));
      text += "\n ";
      for (int v : c.vertices) text += " " + std::to_string(v);
    }
    Json doc;
    doc["count"] = all.size();
    doc["cycles"] = std::move(list);
    emit(doc, text);
  }

  void greedy_cmd() {
    const Matroid m = matroid();
    Json w;
    try {
      w = Json::parse(opts_.weights);
    } catch (const Json::parse_error&) {
      throw UsageError("--weights must be a JSON array");
    }
    if (!w.is_array()) throw UsageError("--weights must be a JSON array");
    bool exact = true;
    for (const Json& v : w) {
      if (v.is_number_float()) {
        exact = false;
      } else if (!v.is_number_integer() && !v.is_string()) {
        throw UsageError("weights must be numbers or rational strings");
      }
    }
    std::vector<int> picked;
    if (exact) {
      std::vector<Rational> weights;
      for (const Json& v : w) {
        weights.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                        : Rational(v.get<std::int64_t>()));
      }
      picked = greedy(m, weights);
    } else {
      std::vector<double> weights;
      for (const Json& v : w) {
        weights.push_back(v.is_string()
                              ? static_cast<double>(parse_rational(v.get<std::string>()))
                              : v.get<double>());
      }
      picked = greedy(m, weights);
    }
    std::string text;
    for (int e : picked) text += (text.empty() ? "" : " ") + m.label(e);
    emit(Json(picked), text);
  }

  void polytope() {
    const auto p = polytope_vertices(matroid());
    Json doc;
    doc["ambient_dim"] = p.ambient_dim;
    doc["dim"] = p.dim;
    doc["vertices"] = p.vertices;
    std::string text = "ambient dimension " + std::to_string(p.ambient_dim) +
                       "\ndimension " + std::to_string(p.dim) +
                       "\nvertices " + std::to_string(p.vertices.size());
    for (const auto& v : p.vertices) {
      text += "\n ";
      for (int c : v) text += " " + std::to_string(c);
    }
    emit(doc, text);
  }

  void chow() {
    const Matroid m = matroid();
    const ChowPresentation chow = chow_presentation(m);
    if (opts_.presentation) {
      Json doc;
      doc["variables"] = set_list(chow.flats);
      Json linear = Json::array();
      for (const auto& form : chow.linear) {
        Json terms = Json::array();
        for (auto [v, c] : form) terms.push_back({v, c});
        linear.push_back(std::move(terms));
      }
      doc["linear"] = std::move(linear);
      Json quadrics = Json::array();
      for (auto [a, b] : chow.quadrics) quadrics.push_back({a, b});
      doc["quadrics"] = std::move(quadrics);
      const std::string text = std::to_string(chow.variable_count()) + " variables, " +
                               std::to_string(chow.linear.size()) + " linear and " +
                               std::to_string(chow.quadrics.size()) + " quadric generators";
      emit(doc, text);
      return;
    }
    ChowOptions options;
    options.exact = opts_.exact;
    options.method = opts_.method == "chain" ? ChowOptions::Method::kChainReduced
                                             : ChowOptions::Method::kFull;
    if (opts_.degree) {
      const std::size_t h = chow_hilbert(chow, *opts_.degree, options);
      emit(Json(h), "h_" + std::to_string(*opts_.degree) + " = " + std::to_string(h));
      return;
    }
    std::vector<std::size_t> hs;
    std::string text;
    for (int d = 0; d < chow.rank; ++d) {
      hs.push_back(chow_hilbert(chow, d, options));
      if (d) text += "\n";
      text += "h_" + std::to_string(d) + " = " + std::to_string(hs.back());
    }
    emit(Json(hs), text);
  }

  void uniform() {
    if (opts_.rank < 0 || opts_.n < 0) throw UsageError("--rank and --n must be nonnegative");
    emit_matroid(uniform_matroid(opts_.rank, static_cast<std::size_t>(opts_.n)));
  }

  void graphic() { emit_matroid(graphic_matroid(graph())); }

  void linear() {
    const Field f = parse_field(opts_.field);
    emit_matroid(linear_matroid(parse_matrix(read_input(opts_.file, in_), f)));
  }

  void named() { emit_matroid(specific_matroid(opts_.name)); }

  void direct_sum_cmd() {
    const Matroid a = matroid();
    const Matroid b = parse_matroid(read_input(opts_.second, in_));
    emit_matroid(direct_sum(a, b));
  }

  void components_cmd() {
    const auto parts = components(matroid());
    std::string json = "[";
    std::string text;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) {
        json += ",";
        text += "\n";
      }
      json += strip_newline(render_matroid(parts[i]));
      text += "component " + std::to_string(i) + "\n" + describe(parts[i]);
    }
    emit_text(json + "]", text);
  }

 private:
  Matroid matroid() const { return parse_matroid(read_input(opts_.file, in_)); }
  Graph graph() const { return parse_graph(read_input(opts_.file, in_)); }

  void emit(const Json& doc, const std::string& text) { emit_text(doc.dump(), text); }

  void emit_text(const std::string& json, const std::optional<std::string>& text = {}) {
    out_ << (opts_.pretty && text ? *text : json) << "\n";
  }

  void emit_matroid(const Matroid& m) {
    emit_text(strip_newline(render_matroid(m)), describe(m));
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Matroid computations on bases, circuits, graphs and matrices.", "matroidkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", opts.pretty, "Human-readable output instead of JSON");

  Runner runner(opts, in, out);
  std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
  auto command = [&](const std::string& name, const std::string& about,
                     void (Runner::*handler)()) {
    CLI::App* sub = app.add_subcommand(name, about);
    commands.emplace_back(sub, [&runner, handler] { (runner.*handler)(); });
    return sub;
  };
  auto with_file = [&](CLI::App* sub, const char* what = "Matroid file ('-' for stdin)") {
    sub->add_option("file", opts.file, what)->required();
    return sub;
  };
  auto with_two = [&](CLI::App* sub) {
    sub->add_option("first", opts.file, "First matroid file")->required();
    sub->add_option("second", opts.second, "Second matroid file")->required();
    return sub;
  };
  const char* graph_file = "Graph file, graph-v1 JSON or edge-list text";

  with_file(command("validate", "Check the basis exchange axiom", &Runner::validate));
  with_file(command("info", "Size, rank, basis count, loops, coloops, f-vector", &Runner::info));
  with_file(command("bases", "List the bases", &Runner::bases));
  with_file(command("circuits", "List the circuits", &Runner::circuits_cmd));
  with_file(command("flats", "List the flats by rank", &Runner::flats_cmd));
  with_file(command("hyperplanes", "List the hyperplanes", &Runner::hyperplanes_cmd));
  with_file(command("dual", "Dual matroid", &Runner::dual_cmd));
  with_file(command("delete", "Delete a set of elements", &Runner::delete_cmd))
      ->add_option("--set", opts.set, "Comma-separated elements")
      ->required();
  with_file(command("contract", "Contract a set of elements", &Runner::contract_cmd))
      ->add_option("--set", opts.set, "Comma-separated elements")
      ->required();
  {
    CLI::App* sub = with_file(command("minor", "Contract, then delete", &Runner::minor_cmd));
    sub->add_option("--contract", opts.contract, "Elements to contract");
    sub->add_option("--delete", opts.remove, "Elements to delete, in the original indexing");
  }
  with_two(command("isomorphic", "Isomorphism test with witness", &Runner::isomorphic));
  with_two(command("has-minor", "Search the first matroid for a minor isomorphic to the second",
                   &Runner::has_minor_cmd));
  with_file(command("tutte", "Tutte polynomial", &Runner::tutte));
  {
    CLI::App* sub = with_file(command("tutte-eval", "Evaluate the Tutte polynomial",
                                      &Runner::tutte_eval));
    sub->add_option("--x", opts.x, "Integer x")->required();
    sub->add_option("--y", opts.y, "Integer y")->required();
  }
  with_file(command("chromatic", "Chromatic polynomial of a graph", &Runner::chromatic),
            graph_file);
  with_file(command("cycles", "Simple cycles of a graph", &Runner::cycles), graph_file);
  with_file(command("greedy", "Maximum-weight basis by the greedy algorithm",
                    &Runner::greedy_cmd))
      ->add_option("--weights", opts.weights, "JSON array of numbers or \"a/b\" strings")
      ->required();
  with_file(command("polytope", "Vertices and dimension of the basis polytope",
                    &Runner::polytope));
  {
    CLI::App* sub = with_file(command("chow", "Hilbert function of the Chow ring", &Runner::chow));
    sub->add_option("--degree", opts.degree, "Single degree");
    sub->add_flag("--presentation", opts.presentation, "Print the generators instead");
    sub->add_flag("--exact", opts.exact, "Eliminate over the rationals");
    sub->add_option("--method", opts.method, "full or chain")
        ->check(CLI::IsMember({"full", "chain"}));
  }
  {
    CLI::App* sub = command("uniform", "Uniform matroid U(r, n)", &Runner::uniform);
    sub->add_option("--rank", opts.rank, "Rank")->required();
    sub->add_option("--n", opts.n, "Ground-set size")->required();
  }
  with_file(command("graphic", "Cycle matroid of a graph", &Runner::graphic), graph_file);
  with_file(command("linear", "Column matroid of a matrix", &Runner::linear),
            "Matrix file (matrix-v1)")
      ->add_option("--field", opts.field, "q or p:<prime>");
  command("named", "Named matroid", &Runner::named)
      ->add_option("name", opts.name, "fano or vamos")
      ->required()
      ->check(CLI::IsMember({"fano", "vamos"}));
  with_two(command("direct-sum", "Direct sum", &Runner::direct_sum_cmd));
  with_file(command("components", "Connected components", &Runner::components_cmd));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) handler();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace matroidkit
