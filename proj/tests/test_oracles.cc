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

#include <algorithm>
#include <bit>

#include "catch_amalgamated.hpp"
#include "mtv/rational.hpp"
#include "support/frozen.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

// Each frozen reference value is re-derived here from the brute-force
// oracles alone.

namespace mtv::testing {
namespace {

std::vector<Mask> k4_edges_complex_facets() {
  const GraphicSpec k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::vector<Mask> facets;
  for (Mask s = 0; s < 64; ++s) {
    if (oracle_independent(k4, s)) facets.push_back(s);
  }
  return facets;
}

TEST_CASE("K4 matroid complex f-vector", "[oracle]") {
  CHECK(oracle_f_vector(oracle_closure(k4_edges_complex_facets())) == frozen::kK4FVector);
}

TEST_CASE("K4 packs two spanning trees", "[oracle]") {
  const GraphicSpec k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(oracle_max_disjoint_bases(k4) == frozen::kK4DisjointBases);
}

TEST_CASE("chessboard complexes", "[oracle]") {
  const MaskComplex c23 = oracle_chessboard(2, 3);
  const MaskComplex c34 = oracle_chessboard(3, 4);
  CHECK(oracle_f_vector(c23) == frozen::kC23FVector);
  CHECK(oracle_f_vector(c34) == frozen::kC34FVector);
  CHECK(c34.faces.back().size() == static_cast<std::size_t>(frozen::kC34Facets));
  CHECK(oracle_reduced_betti(c23) == frozen::kC23Betti);
  CHECK(oracle_reduced_betti(c34) == frozen::kC34Betti);
}

TEST_CASE("six-cycle boundary rank", "[oracle]") {
  std::vector<std::vector<BigInt>> d(6, std::vector<BigInt>(6, 0));
  for (int e = 0; e < 6; ++e) {
    d[e][e] = -1;
    d[(e + 1) % 6][e] = 1;
  }
  CHECK(oracle_diagonal_rank(d) == frozen::kSixCycleBoundaryRank);
}

TEST_CASE("triangle coefficients solve the barycentric system", "[oracle]") {
  const Rational l0(frozen::kTriangleCoefficients[0]);
  const Rational l1(frozen::kTriangleCoefficients[1]);
  const Rational l2(frozen::kTriangleCoefficients[2]);
  CHECK(l0 + l1 + l2 == 1);
  CHECK(l0 * 0 + l1 * 2 + l2 * 1 == 1);
  CHECK(l0 * 0 + l1 * 0 + l2 * 2 == Rational(1, 2));
  CHECK(oracle_hulls_intersect({{{0, 0}, {2, 0}, {1, 2}}, {{1, Rational(1, 2)}}}));
}

TEST_CASE("prime choice by enumeration", "[oracle]") {
  auto largest = [](long b) {
    long best = 0;
    for (long p = 2; 4 * p * p <= b; ++p) {
      bool prime = true;
      for (long q = 2; q * q <= p; ++q) prime = prime && p % q;
      if (prime && 16 * p * p >= b) best = p;
    }
    return best;
  };
  CHECK(largest(64) == frozen::kPrimeFor64);
  CHECK(largest(16) == frozen::kPrimeFor16);
  CHECK(largest(4) == 0);
}

TEST_CASE("closing inequality left-hand sides", "[oracle]") {
  auto lhs = [](long b, long d, long p) -> Rational {
    const long ceil = (b + p - 1) / p;
    return Rational(b * (d + 1), ceil + 1) - 2;
  };
  CHECK(lhs(64, 1, 3) == Rational(frozen::kDoldLhs64d1p3));
  CHECK(lhs(64, 1, 2) == Rational(frozen::kDoldLhs64d1p2));
  CHECK(lhs(16, 1, 2) == Rational(frozen::kDoldLhs16d1p2));
}

TEST_CASE("triangle link is rank one", "[oracle]") {
  const GraphicSpec tri{3, {{0, 1}, {1, 2}, {0, 2}}};
  // Rank of {1, 2} + {0} minus one.
  CHECK(oracle_rank(tri, 0b111) - 1 == frozen::kTriangleLinkRank);
}

TEST_CASE("four collinear points give two crossing pairs", "[oracle]") {
  const std::vector<Point> line = {{0}, {1}, {2}, {3}};
  bool found = false;
  for (Mask a = 1; a < 16; ++a) {
    for (Mask b = 1; b < 16; ++b) {
      if ((a & b) || std::popcount(a) > 2 || std::popcount(b) > 2) continue;
      std::vector<Point> pa, pb;
      for (Element e : mask_to_set(a)) pa.push_back(line[e]);
      for (Element e : mask_to_set(b)) pb.push_back(line[e]);
      found = found || oracle_hulls_intersect({pa, pb});
    }
  }
  CHECK(found);
  // Three pairwise disjoint nonempty faces of size <= 2 on four points use
  // at least two singletons; singletons at distinct points never meet, and
  // a segment with a singleton inside plus another singleton forces equal
  // points.
  CHECK(frozen::kFourCollinearMaxT == 2);
}

TEST_CASE("oracle hull decisions on simple cases", "[oracle]") {
  CHECK(oracle_hulls_intersect({{{0}, {2}}, {{1}, {3}}}));
  CHECK_FALSE(oracle_hulls_intersect({{{0}, {1}}, {{2}, {3}}}));
  CHECK(oracle_hulls_intersect({{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}}));
  CHECK_FALSE(oracle_hulls_intersect({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}));
}

TEST_CASE("oracle generator specs are matroids", "[oracle]") {
  for (const NamedMatroid& nm : matroid_generator()) {
    INFO(nm.name);
    const int n = spec_size(nm.spec);
    REQUIRE(n <= 8);
    const std::vector<Mask> bases = oracle_bases(nm.spec);
    REQUIRE_FALSE(bases.empty());
    // Base exchange, the strong form.
    for (Mask a : bases) {
      for (Mask b : bases) {
        for (Element x : mask_to_set(a & ~b)) {
          bool ok = false;
          for (Element y : mask_to_set(b & ~a)) {
            const Mask swapped = (a & ~(Mask{1} << x)) | Mask{1} << y;
            ok = ok || std::find(bases.begin(), bases.end(), swapped) != bases.end();
          }
          REQUIRE(ok);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mtv::testing
