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

#include "support/generators.hpp"

#include <algorithm>
#include <random>

#include "support/oracles.hpp"

namespace mtv::testing {

std::vector<NamedMatroid> uniform_family() {
  std::vector<NamedMatroid> out;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= 8; ++n) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", UniformSpec{r, n}});
    }
  }
  return out;
}

std::vector<NamedMatroid> graphic_family(std::uint64_t seed) {
  using Edges = std::vector<std::pair<int, int>>;
  std::vector<NamedMatroid> out = {
      {"triangle", GraphicSpec{3, {{0, 1}, {1, 2}, {0, 2}}}},
      {"K4", GraphicSpec{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}},
      {"C5", GraphicSpec{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}}},
      {"W4", GraphicSpec{5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}}},
      {"K23", GraphicSpec{5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}}},
      {"bowtie", GraphicSpec{5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}}},
      {"fat-triangle-loop", GraphicSpec{3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 2}}}},
      {"double-K4-minus", GraphicSpec{4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {0, 3}}}},
  };
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10; ++i) {
    const int v = 2 + static_cast<int>(rng() % 4);
    const int e = 3 + static_cast<int>(rng() % 6);
    Edges edges;
    for (int j = 0; j < e; ++j) {
      const int a = static_cast<int>(rng() % v);
      const int b = rng() % 8 == 0 ? a : static_cast<int>(rng() % v);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    out.push_back({"random-graph-" + std::to_string(i), GraphicSpec{v, edges}});
  }
  return out;
}

std::vector<NamedMatroid> partition_family() {
  return {
      {"Y(2,1)", PartitionSpec{4, {{0, 1}, {2, 3}}, {1, 1}}},
      {"Y(3,1)", PartitionSpec{6, {{0, 1, 2}, {3, 4, 5}}, {1, 1}}},
      {"Y(2,2)", PartitionSpec{6, {{0, 1}, {2, 3}, {4, 5}}, {1, 1, 1}}},
      {"blocks-2-3-cap-1-2", PartitionSpec{5, {{0, 1}, {2, 3, 4}}, {1, 2}}},
      {"blocks-with-loops", PartitionSpec{7, {{0, 2, 4}, {1, 3}}, {2, 1}}},
      {"three-blocks", PartitionSpec{8, {{0, 1, 2}, {3, 4}, {5, 6, 7}}, {2, 1, 1}}},
      {"single-block", PartitionSpec{4, {{0, 1, 2, 3}}, {2}}},
      {"zero-capacity", PartitionSpec{5, {{0, 1}, {2, 3, 4}}, {0, 2}}},
  };
}

std::vector<NamedMatroid> explicit_family(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedMatroid> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t p = i % 2 ? 3 : 2;
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = 3 + static_cast<int>(rng() % 4);
    LinearSpec l{Field::kPrime, p, {}, cols};
    for (int r = 0; r < rows; ++r) {
      std::vector<Rational> row;
      for (int c = 0; c < cols; ++c) row.emplace_back(static_cast<long>(rng() % p));
      l.rows.push_back(row);
    }
    ExplicitSpec e{cols, {}};
    for (Mask b : oracle_bases(l)) e.maximal.push_back(mask_to_set(b));
    out.push_back({"explicit-GF" + std::to_string(p) + "-" + std::to_string(i), e});
  }
  return out;
}

std::vector<NamedMatroid> matroid_generator() {
  std::vector<NamedMatroid> out;
  for (auto family : {uniform_family(), graphic_family(), partition_family(), explicit_family()}) {
    out.insert(out.end(), family.begin(), family.end());
  }
  return out;
}

std::vector<std::vector<std::vector<Vertex>>> random_facet_lists(int count, int max_vertices,
                                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::vector<Vertex>>> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    const int facets = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<Vertex>> list;
    for (int f = 0; f < facets; ++f) {
      std::vector<Vertex> face;
      for (int v = 0; v < n; ++v) {
        if (rng() % 2) face.push_back(static_cast<Vertex>(v));
      }
      list.push_back(face);
    }
    out.push_back(list);
  }
  return out;
}

}  // namespace mtv::testing
