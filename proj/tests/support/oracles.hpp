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

#ifndef MTV_TESTS_SUPPORT_ORACLES_HPP_
#define MTV_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <vector>

#include "mtv/complex.hpp"
#include "mtv/matroid.hpp"
#include "mtv/rational.hpp"
#include "mtv/tverberg.hpp"

// Brute-force references. None of these call into the library beyond its
// plain data types, so agreement is evidence rather than tautology.
namespace mtv::testing {

using Mask = std::uint32_t;

int spec_size(const MatroidSpec& spec);
FaceSet mask_to_set(Mask m);
Mask set_to_mask(const FaceSet& s);

bool oracle_independent(const MatroidSpec& spec, Mask s);
int oracle_rank(const MatroidSpec& spec, Mask a);
std::vector<Mask> oracle_bases(const MatroidSpec& spec);
// Largest family of pairwise disjoint bases, by exhaustive search.
int oracle_max_disjoint_bases(const MatroidSpec& spec);
// Whether `a` splits into at most m independent sets, by trying every
// assignment of elements to parts.
bool oracle_union_of_independent(const MatroidSpec& spec, Mask a, int m);

// Rank over Q of a dense integer matrix by unimodular row and column
// operations down to diagonal form.
int oracle_diagonal_rank(std::vector<std::vector<BigInt>> m);

// Complex given by facets over at most 16 vertices.
struct MaskComplex {
  std::vector<std::vector<Mask>> faces;  // faces[d + 1], sorted
};
MaskComplex oracle_closure(const std::vector<Mask>& facets);
std::vector<std::uint64_t> oracle_f_vector(const MaskComplex& x);
// Reduced Betti numbers over Q in degrees 0..top face dimension.
std::vector<std::uint64_t> oracle_reduced_betti(const MaskComplex& x);
// Non-attacking rook placements on a k x m board, cell row * m + column.
MaskComplex oracle_chessboard(int k, int m);

// Fourier-Motzkin decision of whether the convex hulls share a point.
bool oracle_hulls_intersect(const std::vector<std::vector<Point>>& sets);

}  // namespace mtv::testing

#endif  // MTV_TESTS_SUPPORT_ORACLES_HPP_
