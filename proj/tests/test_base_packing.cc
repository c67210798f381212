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

#include <bit>

#include "catch_amalgamated.hpp"
#include "mtv/base_packing.hpp"
#include "mtv/complex.hpp"
#include "support/frozen.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mtv {
namespace {

using testing::Mask;
using testing::mask_to_set;

Matroid k4() { return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Matroid triangle() { return Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

void check_packing(const Matroid& m, const std::vector<FaceSet>& bases) {
  std::vector<char> used(m.size(), 0);
  for (const FaceSet& b : bases) {
    REQUIRE(m.is_independent(b));
    REQUIRE(static_cast<int>(b.size()) == m.rank());
    for (Element e : b) {
      REQUIRE_FALSE(used[e]);
      used[e] = 1;
    }
  }
}

TEST_CASE("pack_k_bases examples", "[packing]") {
  auto u15 = pack_k_bases(Matroid::uniform(1, 5), 5);
  REQUIRE(std::holds_alternative<BasePacking>(u15));
  CHECK(std::get<BasePacking>(u15).bases ==
        std::vector<FaceSet>{{0}, {1}, {2}, {3}, {4}});

  auto two_trees = pack_k_bases(k4(), 2);
  REQUIRE(std::holds_alternative<BasePacking>(two_trees));
  check_packing(k4(), std::get<BasePacking>(two_trees).bases);

  auto tri = pack_k_bases(triangle(), 2);
  REQUIRE(std::holds_alternative<PackingCertificate>(tri));
  const auto& cert = std::get<PackingCertificate>(tri);
  CHECK(cert.target == 2);
  CHECK(certificate_holds(triangle(), cert));
  CHECK(certificate_holds(triangle(), PackingCertificate{{}, 2}));
  CHECK_FALSE(certificate_holds(triangle(), PackingCertificate{{0, 1, 2}, 2}));
}

TEST_CASE("max_disjoint_bases examples", "[packing]") {
  for (int d = 0; d <= 2; ++d) {
    for (int n = d + 1; n <= 9; ++n) {
      const UniformSpec spec{d + 1, n};
      const MaxPacking r = max_disjoint_bases(Matroid(spec));
      CHECK(r.count == testing::oracle_max_disjoint_bases(spec));
      CHECK(r.count == n / (d + 1));
    }
  }
  CHECK(max_disjoint_bases(k4()).count == testing::frozen::kK4DisjointBases);
  for (int m = 1; m <= 7; ++m) CHECK(max_disjoint_bases(Matroid::uniform(1, m)).count == m);
  const MaxPacking zero = max_disjoint_bases(Matroid::uniform(0, 3));
  CHECK(zero.degenerate);
  CHECK(zero.count == 0);
  CHECK_FALSE(zero.next_impossible.has_value());
}

TEST_CASE("colourful complexes pack r bases", "[packing]") {
  for (int r = 1; r <= 4; ++r) {
    for (int d = 1; d <= 3; ++d) {
      const Matroid y = colourful_complex(r, d);
      CHECK(y.rank() == d + 1);
      CHECK(max_disjoint_bases(y).count == r);
    }
  }
}

TEST_CASE("pack_into_independent examples", "[packing]") {
  const FaceSet base{0, 1, 2};
  auto one = pack_into_independent(k4(), base, 1);
  REQUIRE(std::holds_alternative<std::vector<FaceSet>>(one));
  CHECK(std::get<std::vector<FaceSet>>(one) == std::vector<FaceSet>{base});

  auto fail = pack_into_independent(triangle(), {0, 1, 2}, 1);
  REQUIRE(std::holds_alternative<CoveringCertificate>(fail));
  CHECK(std::get<CoveringCertificate>(fail).witness == FaceSet{0, 1, 2});
  CHECK(certificate_holds(triangle(), std::get<CoveringCertificate>(fail)));

  auto two = pack_into_independent(triangle(), {0, 1, 2}, 2);
  REQUIRE(std::holds_alternative<std::vector<FaceSet>>(two));
  const auto& parts = std::get<std::vector<FaceSet>>(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() + parts[1].size() == 3);
  for (const auto& p : parts) CHECK(triangle().is_independent(p));

  CHECK(covering_number(triangle(), {0, 1, 2}) == 2);
  CHECK_FALSE(covering_number(Matroid::graphic(1, {{0, 0}}), {0}).has_value());
}

TEST_CASE("partition_almost_equal", "[packing]") {
  auto sizes = [](int b, int k) {
    std::vector<std::size_t> out;
    for (const auto& part : partition_almost_equal(b, k)) out.push_back(part.size());
    return out;
  };
  CHECK(sizes(7, 3) == std::vector<std::size_t>{3, 2, 2});
  CHECK(sizes(4, 2) == std::vector<std::size_t>{2, 2});
  CHECK(sizes(2, 5) == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(partition_almost_equal(5, 2) == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
}

TEST_CASE("b(M) against brute force with valid certificates", "[packing][property]") {
  for (const auto& nm : testing::matroid_generator()) {
    INFO(nm.name);
    const Matroid m{nm.spec};
    const MaxPacking r = max_disjoint_bases(m);
    REQUIRE(r.count == testing::oracle_max_disjoint_bases(nm.spec));
    REQUIRE(static_cast<int>(r.packing.bases.size()) == r.count);
    check_packing(m, r.packing.bases);
    if (!r.degenerate) {
      REQUIRE(r.next_impossible.has_value());
      REQUIRE(r.next_impossible->target == r.count + 1);
      const FaceSet& a = r.next_impossible->witness;
      const long k = r.count + 1;
      const long lhs = k * testing::oracle_rank(nm.spec, testing::set_to_mask(a)) +
                       (m.size() - static_cast<long>(a.size()));
      REQUIRE(lhs < k * m.rank());
    }
  }
}

TEST_CASE("covering duality", "[packing][property]") {
  for (const auto& nm : testing::matroid_generator()) {
    const Matroid m{nm.spec};
    const int n = std::min(m.size(), 6);
    INFO(nm.name);
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      for (int parts = 1; parts <= 3; ++parts) {
        int excess = 0;
        for (Mask s = a;; s = (s - 1) & a) {
          excess = std::max(excess, std::popcount(s) - parts * m.rank(mask_to_set(s)));
          if (s == 0) break;
        }
        const auto r = pack_into_independent(m, mask_to_set(a), parts);
        const bool ok = std::holds_alternative<std::vector<FaceSet>>(r);
        REQUIRE(ok == (excess <= 0));
        REQUIRE(ok == testing::oracle_union_of_independent(nm.spec, a, parts));
        if (ok) {
          Mask seen = 0;
          const auto& got = std::get<std::vector<FaceSet>>(r);
          REQUIRE(static_cast<int>(got.size()) <= parts);
          for (const FaceSet& p : got) {
            REQUIRE(m.is_independent(p));
            REQUIRE((seen & testing::set_to_mask(p)) == 0);
            seen |= testing::set_to_mask(p);
          }
          REQUIRE(seen == a);
        } else {
          REQUIRE(certificate_holds(m, std::get<CoveringCertificate>(r)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace mtv
