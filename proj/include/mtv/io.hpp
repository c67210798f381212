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

#ifndef MTV_IO_HPP_
#define MTV_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtv/matroid.hpp"
#include "mtv/tverberg.hpp"

namespace mtv {

using Json = nlohmann::ordered_json;

// Matroid records: {"format-version": 1, "type": ..., type fields}.
//   uniform   "rank", "size"
//   graphic   "vertices", "edges": [[u, v], ...]
//   linear    "field": "rational" | "prime", "prime" (for prime fields),
//             "size", "rows": [[entry, ...], ...] with entries "p/q" or ints
//   partition "size", "blocks": [[ids], ...], "capacities": [ints]
//   explicit  "size", "maximal": [[ids], ...]
// An optional "names" array labels the elements.
struct MatroidFile {
  Matroid matroid;
  std::vector<std::string> names;
};

MatroidFile parse_matroid(const Json& record);
MatroidFile read_matroid(std::istream& in);
Json matroid_to_json(const MatroidSpec& spec);

// Point files: optional "format-version=1" line, then "d=<dim>", then one
// "id: r1 ... rd" line per element. '#' starts a comment line. A negative
// `size` accepts any id.
PointConfig read_points(std::istream& in, int size);
void write_points(std::ostream& out, const PointConfig& cfg);

// Comma-separated ids, e.g. "0,2,5"; empty string for the empty set.
FaceSet parse_id_list(const std::string& text, int size);
// Semicolon-separated id lists, e.g. "0,1;2,3".
std::vector<FaceSet> parse_id_groups(const std::string& text, int size);

Json face_to_json(const FaceSet& f);
Json rational_vector_to_json(const std::vector<Rational>& v);

}  // namespace mtv

#endif  // MTV_IO_HPP_
