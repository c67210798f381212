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

#ifndef MTV_MATROID_HPP_
#define MTV_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mtv/rational.hpp"

namespace mtv {

// Ground elements are dense ids 0..n-1.
using Element = int;

// Strictly increasing element ids. The empty set is a valid face.
using FaceSet = std::vector<Element>;

// Sorts, deduplicates and range-checks `ids` against a ground set of size n.
FaceSet make_face_set(std::vector<Element> ids, int n);

struct UniformSpec {
  int rank = 0;
  int size = 0;
};

// Multigraph; an edge (u, u) is a loop of the matroid.
struct GraphicSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

enum class Field { kRational, kPrime };

// Column j of `rows` is the vector of ground element j. For kPrime every
// entry must have a denominator invertible mod `prime`.
struct LinearSpec {
  Field field = Field::kRational;
  std::uint64_t prime = 0;
  std::vector<std::vector<Rational>> rows;
  int size = 0;  // column count; needed when rows is empty
};

// Elements outside every block are loops.
struct PartitionSpec {
  int size = 0;
  std::vector<FaceSet> blocks;
  std::vector<int> capacities;
};

// The independent sets are the down-closure of `maximal`.
struct ExplicitSpec {
  int size = 0;
  std::vector<FaceSet> maximal;
};

using MatroidSpec =
    std::variant<UniformSpec, GraphicSpec, LinearSpec, PartitionSpec, ExplicitSpec>;

// A pair (I, J) of independent sets with |I| < |J| such that no element of
// J - I extends I.
struct ExchangeViolation {
  FaceSet smaller;
  FaceSet larger;
};

// Checks the exchange axiom on the down-closure of spec.maximal. Returns
// the first violation in (size, lexicographic) order, or nullopt.
std::optional<ExchangeViolation> validate_matroid(const ExplicitSpec& spec);

// Immutable independence/rank oracle. Restriction and contraction keep the
// original index space: removed elements become loops of the result.
class Matroid {
 public:
  // Validates the spec; throws InputError on malformed data or, for
  // ExplicitSpec, on an exchange-axiom violation.
  explicit Matroid(MatroidSpec spec);

  static Matroid uniform(int rank, int size);
  static Matroid graphic(int vertex_count, std::vector<std::pair<int, int>> edges);
  static Matroid partition(int size, std::vector<FaceSet> blocks, std::vector<int> capacities);
  static Matroid explicit_sets(int size, std::vector<FaceSet> maximal);

  int size() const { return size_; }
  const MatroidSpec& spec() const { return *spec_; }
  // True when the oracle is a restriction/contraction of spec().
  bool is_derived() const { return !contracted_.empty() || has_deleted_; }

  // Both throw InputError when an id is out of range. Unsorted input is
  // accepted; duplicates are not.
  bool is_independent(std::span<const Element> s) const;
  int rank(std::span<const Element> a) const;
  int rank() const { return full_rank_; }
  bool is_loop(Element e) const;
  std::vector<Element> non_loops() const;

  Matroid restrict(std::span<const Element> keep) const;
  // The link of a non-loop v: S is independent iff v is not in S and
  // S + v is independent. Throws PreconditionError when v is a loop.
  Matroid contract_link(Element v) const;

 private:
  Matroid() = default;
  void check_ids(std::span<const Element> s) const;
  int spec_rank(std::span<const Element> a) const;
  int linear_rank(std::span<const Element> a) const;
  void precompute();

  std::shared_ptr<const MatroidSpec> spec_;
  int size_ = 0;
  int full_rank_ = 0;
  std::vector<char> deleted_;     // per element
  bool has_deleted_ = false;
  FaceSet contracted_;            // independent in spec()
  // Cached forms of the spec.
  std::vector<std::vector<BigInt>> int_columns_;
  std::vector<std::vector<std::uint64_t>> mod_columns_;
  std::vector<std::uint64_t> explicit_masks_;
  std::vector<int> block_of_;
};

// All subsets of `ids` in (size, lexicographic) order. Used by validators
// and tests on small ground sets.
std::vector<FaceSet> subsets_by_size(const FaceSet& ids);

// ExplicitSpec listing the bases of m; equal oracle on every subset.
ExplicitSpec to_explicit(const Matroid& m);

}  // namespace mtv

#endif  // MTV_MATROID_HPP_
