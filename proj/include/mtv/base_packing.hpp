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

#ifndef MTV_BASE_PACKING_HPP_
#define MTV_BASE_PACKING_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "mtv/matroid.hpp"

namespace mtv {

// Pairwise disjoint bases of one matroid.
struct BasePacking {
  std::vector<FaceSet> bases;
};

// A set A with k*rank(A) + |V - A| < k*rank(V): no k disjoint bases exist.
struct PackingCertificate {
  FaceSet witness;
  int target = 0;
};

// A' inside A with m*rank(A') < |A'|: A is not a union of m independent sets.
struct CoveringCertificate {
  FaceSet witness;
  int parts = 0;
};

bool certificate_holds(const Matroid& m, const PackingCertificate& cert);
bool certificate_holds(const Matroid& m, const CoveringCertificate& cert);

std::variant<BasePacking, PackingCertificate> pack_k_bases(const Matroid& m, int k);

struct MaxPacking {
  int count = 0;  // b(M)
  BasePacking packing;
  std::optional<PackingCertificate> next_impossible;  // for count + 1
  bool degenerate = false;                            // rank 0
};

MaxPacking max_disjoint_bases(const Matroid& m);

// Splits `a` into at most `parts` disjoint independent sets (empty parts
// dropped), or proves that impossible.
std::variant<std::vector<FaceSet>, CoveringCertificate> pack_into_independent(
    const Matroid& m, const FaceSet& a, int parts);

// Smallest m >= 1 for which pack_into_independent succeeds; nullopt when
// `a` contains a loop.
std::optional<int> covering_number(const Matroid& m, const FaceSet& a);

// k contiguous blocks of 0..b-1, larger blocks first, sizes floor/ceil(b/k).
std::vector<std::vector<int>> partition_almost_equal(int b, int k);

}  // namespace mtv

#endif  // MTV_BASE_PACKING_HPP_
