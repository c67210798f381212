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

#ifndef MTV_HOMOLOGY_HPP_
#define MTV_HOMOLOGY_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mtv/base_packing.hpp"
#include "mtv/complex.hpp"
#include "mtv/limits.hpp"
#include "mtv/matroid.hpp"
#include "mtv/rational.hpp"

namespace mtv {

// Column-major sparse matrix with small integer entries.
struct SparseIntMatrix {
  using Entry = std::pair<std::uint32_t, int>;  // (row, value), rows increasing

  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const { return columns.size(); }
  // "format-version 1", "rows R cols C nnz N", then "row col value" lines.
  void write_triplets(std::ostream& out) const;
};

// Simplicial boundary ∂_i from dimension i to i-1. Vertices of each face are
// in increasing order and omitting position j carries sign (-1)^j. ∂_0 is
// the augmentation onto the one-dimensional chain group of the empty face.
SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int i, int threads = 1);

inline constexpr std::uint32_t kRankPrime = 2147483647u;

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p = kRankPrime);
// Exact rank over Q by fraction-free column reduction on big integers.
std::size_t rank_rational(const SparseIntMatrix& m);

struct HomologyOptions {
  // Skip the mod-p pass and eliminate every matrix exactly.
  bool always_exact = false;
  int threads = 1;
};

// Reduced Betti numbers over Q in degrees 0..up_to.
struct BettiVector {
  std::vector<std::uint64_t> values;
  int up_to = -1;
  int exact_ranks = 0;  // matrices eliminated over Q
};

// Rank over GF(p) never exceeds rank over Q, so a vanishing mod-p Betti
// number is already exact; any nonvanishing degree is recomputed over Q.
// Requires x materialized through up_to + 1 unless x is complete.
BettiVector betti_reduced(const SimplicialComplex& x, int up_to, const HomologyOptions& opts = {});

struct ConnectivityReport {
  int bound = -1;
  bool verified = false;
  bool nonempty = false;
  std::vector<std::uint64_t> betti;        // degrees 0..bound
  std::optional<int> first_nonvanishing;   // -1 when the complex is empty
  FVector face_counts;
  std::uint64_t boundary_columns = 0;
  int exact_ranks = 0;
};

// Checks the homological consequence of c-connectivity: nonempty and
// β̃_i = 0 for 0 <= i <= c. Bounds below -1 hold vacuously.
ConnectivityReport homologically_connected(const SimplicialComplex& x, int c,
                                           const HomologyOptions& opts = {});

// The hypotheses of the deleted-join connectivity bound failed.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(const std::string& what, int index, FaceSet witness)
      : std::runtime_error(what), index_(index), witness_(std::move(witness)) {}
  int index() const { return index_; }
  // Overlapping elements, or a covering certificate A' inside A_index.
  const FaceSet& witness() const { return witness_; }

 private:
  int index_;
  FaceSet witness_;
};

struct ClaimReport {
  int parts = 0;                  // m
  std::uint64_t total_size = 0;   // Σ|A_i|
  int bound = 0;                  // ⌈Σ|A_i| / (m + 1)⌉ - 2
  ConnectivityReport connectivity;
};

// Validates that the A_i are disjoint and each is a union of at most m
// independent sets of M_i, then checks the deleted join of the M_i.
ClaimReport verify_claim(std::span<const Matroid> matroids, std::span<const FaceSet> sets,
                         int parts, const Limits& limits = {}, const HomologyOptions& opts = {});

struct CorollaryReport {
  int bases = 0;           // b(M)
  int rank = 0;            // ρ(V)
  int copies = 0;          // k
  Rational real_bound;     // bρ / (⌈b/k⌉ + 1) - 2
  int bound = 0;           // floor of real_bound
  int claim_bound = 0;     // ⌈bρ / (⌈b/k⌉ + 1)⌉ - 2
  std::vector<std::vector<int>> groups;
  ConnectivityReport connectivity;
};

CorollaryReport verify_corollary(const Matroid& m, int k, const Limits& limits = {},
                                 const HomologyOptions& opts = {});

struct ConjectureRecord {
  int bases = 0;
  int copies = 0;
  int target = 0;  // kρ(V) - 2
  bool verdict = false;
  ConnectivityReport connectivity;
};

ConjectureRecord conjecture_scan(const Matroid& m, int k, const Limits& limits = {},
                                 const HomologyOptions& opts = {});
std::vector<ConjectureRecord> conjecture_scan(std::span<const Matroid> family, int k,
                                              const Limits& limits = {},
                                              const HomologyOptions& opts = {});

// The matroid complex is homologically (ρ(V) - 2)-connected.
ConnectivityReport verify_matroid_connectivity(const Matroid& m, const Limits& limits = {},
                                               const HomologyOptions& opts = {});

}  // namespace mtv

#endif  // MTV_HOMOLOGY_HPP_
