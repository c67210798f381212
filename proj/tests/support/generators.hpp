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

#ifndef MTV_TESTS_SUPPORT_GENERATORS_HPP_
#define MTV_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mtv/complex.hpp"
#include "mtv/matroid.hpp"

namespace mtv::testing {

struct NamedMatroid {
  std::string name;
  MatroidSpec spec;
};

// Uniform r <= 3, n <= 8.
std::vector<NamedMatroid> uniform_family();
// Multigraphs on at most 5 vertices with at most 8 edges, loops included.
std::vector<NamedMatroid> graphic_family(std::uint64_t seed = 11);
// At most 3 blocks on at most 8 elements; some elements outside all blocks.
std::vector<NamedMatroid> partition_family();
// `count` explicit specs on at most 6 elements, read off random GF(2) and
// GF(3) matrices through the test-side oracle.
std::vector<NamedMatroid> explicit_family(int count = 50, std::uint64_t seed = 2026);
// All of the above.
std::vector<NamedMatroid> matroid_generator();

// Random down-closed complexes on at most `max_vertices` vertices, given by
// facets.
std::vector<std::vector<std::vector<Vertex>>> random_facet_lists(int count, int max_vertices,
                                                                 std::uint64_t seed);

}  // namespace mtv::testing

#endif  // MTV_TESTS_SUPPORT_GENERATORS_HPP_
