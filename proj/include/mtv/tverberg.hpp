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

#ifndef MTV_TVERBERG_HPP_
#define MTV_TVERBERG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtv/limits.hpp"
#include "mtv/matroid.hpp"
#include "mtv/rational.hpp"

namespace mtv {

using Point = std::vector<Rational>;

// Vertex images of an affine map into R^dim, indexed by element. Loops may
// lack coordinates.
struct PointConfig {
  int dim = 0;
  std::vector<std::optional<Point>> coords;

  const Point& at(Element e) const;
};

struct HullIntersection {
  Point point;
  std::vector<std::vector<Rational>> coefficients;  // per set, per point
};

// A common point of the convex hulls, with convex coefficients, or nullopt.
// Decided exactly by linear feasibility.
std::optional<HullIntersection> hulls_intersect(const std::vector<std::vector<Point>>& sets);

struct TverbergWitness {
  std::vector<FaceSet> faces;
  Point point;
  std::vector<std::vector<Rational>> coefficients;
};

// Exact re-check of disjointness, independence, convexity and the common
// point. On failure `why` (when given) names the broken invariant.
bool validate_witness(const Matroid& m, const PointConfig& cfg, const TverbergWitness& w,
                      std::string* why = nullptr);

struct SearchResult {
  std::optional<TverbergWitness> witness;
  // Tuples decided up to and including the witness, in canonical order;
  // the full count when there is no witness.
  std::uint64_t tuples_examined = 0;
  std::uint64_t candidate_faces = 0;
  bool rank_matches_dimension = true;  // rank(M) == dim + 1
};

// First t-tuple (in canonical order) of pairwise disjoint nonempty
// independent sets of size <= dim + 1 whose images' hulls meet. Faces are
// ordered lexicographically by sorted ids; tuples by increasing face index.
SearchResult find_tverberg(const Matroid& m, const PointConfig& cfg, int t,
                           const Limits& limits = {});

// Largest prime in [√b/4, √b/2], endpoints compared exactly.
std::optional<std::int64_t> choose_prime(std::int64_t b);

struct DoldInequality {
  Rational lhs;      // b(d+1) / (⌈b/p⌉ + 1) - 2
  std::int64_t rhs;  // (d+1)(p-1) - 1
  bool holds = false;
};

DoldInequality evaluate_dold_inequality(std::int64_t b, std::int64_t d, std::int64_t p);
bool dold_inequality_holds(std::int64_t b, std::int64_t d, std::int64_t p);

// Smallest integer t with t >= √b/4, i.e. 16t² >= b.
std::int64_t theorem_target(std::int64_t b);

struct TheoremReport {
  int bases = 0;
  int dim = 0;
  std::int64_t target = 0;
  std::optional<std::int64_t> prime;
  std::optional<DoldInequality> inequality;
  SearchResult search;
  bool witness_found = false;
  // No witness at the target after exhaustive search.
  bool falsification_candidate = false;
};

// Requires rank(M) == cfg.dim + 1 (PreconditionError otherwise).
TheoremReport verify_theorem(const Matroid& m, const PointConfig& cfg, const Limits& limits = {});

struct MaxTResult {
  int t = 0;
  std::optional<TverbergWitness> witness;
  bool monotone = true;  // every prefix of the witness re-validated
};

// Largest t <= cap with a witness, searching downward from cap.
MaxTResult max_affine_t(const Matroid& m, const PointConfig& cfg, int cap,
                        const Limits& limits = {});

// Seeded configuration for the given elements: coordinates p/q with
// |p| <= 1000 and 1 <= q <= 16.
PointConfig random_config(const std::vector<Element>& elements, int size, int dim,
                          std::uint64_t seed);

}  // namespace mtv

#endif  // MTV_TVERBERG_HPP_
