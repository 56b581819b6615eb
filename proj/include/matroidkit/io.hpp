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

#ifndef MATROIDKIT_IO_HPP
#define MATROIDKIT_IO_HPP

#include <iostream>
#include <string>
#include <string_view>

#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/graph.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

// File formats. Rendering is compact JSON followed by a newline, and every
// parser accepts what the matching renderer writes, so render(parse(s)) == s
// for rendered text. All parsers throw Error on malformed input.
//
//   {"format":"matroid-v1","n":4,"labels":["a","b","c","d"],"bases":[[0,1],[0,2]]}
//   {"format":"graph-v1","v":3,"edges":[[0,1],[1,2]]}
//   {"format":"matrix-v1","rows":1,"cols":2,"entries":[["4","2/3"]]}
//
// Graphs may also be given as text: a line "v m" followed by m lines "u w".

Matroid parse_matroid(std::string_view text);
std::string render_matroid(const Matroid& m);

/// Accepts graph-v1 JSON or the edge-list text format.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);
std::string render_graph_text(const Graph& g);

/// Entries are read exactly and then placed in `field`.
ExactMatrix parse_matrix(std::string_view text, const Field& field);
std::string render_matrix(const ExactMatrix& a);

/// Whole file contents; "-" reads `standard_input`. Throws Error if the file
/// cannot be read.
std::string read_input(const std::string& path, std::istream& standard_input = std::cin);

}  // namespace matroidkit

#endif  // MATROIDKIT_IO_HPP
