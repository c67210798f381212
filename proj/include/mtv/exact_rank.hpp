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

#ifndef MTV_EXACT_RANK_HPP_
#define MTV_EXACT_RANK_HPP_

#include <cstdint>
#include <vector>

#include "mtv/rational.hpp"

namespace mtv {

// Dense row-major matrices for the small systems that arise in linear
// matroids. The sparse boundary-matrix machinery lives in homology.hpp.
using IntMatrix = std::vector<std::vector<BigInt>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

// Rank over the rationals by Bareiss fraction-free elimination. Every
// intermediate entry is a minor of the input, so no fractions appear.
int rank_fraction_free(IntMatrix m);

// Rank over GF(p); entries must already be reduced mod p.
int rank_mod_p(ModMatrix m, std::uint64_t p);

// Modular inverse for prime p, a != 0 mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace mtv

#endif  // MTV_EXACT_RANK_HPP_
