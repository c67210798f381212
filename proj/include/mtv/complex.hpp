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

#ifndef MTV_COMPLEX_HPP_
#define MTV_COMPLEX_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "mtv/limits.hpp"
#include "mtv/matroid.hpp"

namespace mtv {

using Vertex = std::uint32_t;

// Vertex (copy, element) of a join over a shared element index space,
// encoded as copy * elements + element. Copies are 0-based.
struct LabeledVertex {
  int copy = 0;
  Element element = 0;
};

struct Labeling {
  int copies = 0;    // 0 for an unlabeled complex
  int elements = 0;  // size of the shared element space

  Vertex encode(LabeledVertex v) const {
    return static_cast<Vertex>(v.copy * elements + v.element);
  }
  LabeledVertex decode(Vertex v) const {
    return {static_cast<int>(v) / elements, static_cast<Element>(v % elements)};
  }
};

// Faces of one dimension, stored flat in lexicographic order.
class FaceTable {
 public:
  explicit FaceTable(int width = 0) : width_(width) {}

  int width() const { return width_; }
  std::size_t size() const { return width_ == 0 ? count_ : data_.size() / width_; }
  std::span<const Vertex> operator[](std::size_t i) const {
    return {data_.data() + i * width_, static_cast<std::size_t>(width_)};
  }
  // Index of `face` or -1. Requires sorted storage.
  std::int64_t find(std::span<const Vertex> face) const;
  void push_back(std::span<const Vertex> face);
  void append(const FaceTable& other);
  void sort_unique();

 private:
  int width_;
  std::size_t count_ = 0;  // only used for width 0 (the empty face)
  std::vector<Vertex> data_;
};

// f_{-1}, f_0, ..., f_D.
struct FVector {
  std::vector<std::uint64_t> counts;  // counts[i + 1] = f_i

  std::uint64_t f(int dim) const { return counts.at(dim + 1); }
  int max_dim() const { return static_cast<int>(counts.size()) - 2; }
  bool operator==(const FVector&) const = default;
};

// Membership test for a candidate face given in increasing vertex order.
using FaceOracle = std::function<bool(std::span<const Vertex>)>;

// A simplicial complex on vertex ids 0..vertex_slots-1, materialized through
// max_dim(). complete() means no faces exist above max_dim().
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Enumerates a down-closed family through `max_dim` by extending faces
  // with larger vertices in lexicographic order. Throws ResourceLimitError
  // when a dimension exceeds limits.max_faces.
  static SimplicialComplex from_oracle(int vertex_slots, const std::vector<Vertex>& vertices,
                                       const FaceOracle& oracle, int max_dim,
                                       const Limits& limits = {}, Labeling labeling = {});

  // Down-closure of `facets`, truncated at `max_dim` (negative: no cut).
  static SimplicialComplex from_facets(int vertex_slots,
                                       const std::vector<std::vector<Vertex>>& facets,
                                       int max_dim = -2, const Limits& limits = {});

  int vertex_slots() const { return vertex_slots_; }
  int max_dim() const { return static_cast<int>(levels_.size()) - 2; }
  bool complete() const { return complete_; }
  const Labeling& labeling() const { return labeling_; }

  // dim in [-1, max_dim()].
  const FaceTable& faces(int dim) const { return levels_.at(dim + 1); }
  bool contains(std::span<const Vertex> face) const;
  std::vector<Vertex> vertices() const;
  FVector f_vector() const;
  // Highest dimension with a face (-1 for the complex {∅}).
  int dimension() const;

  // Structural equality of materialized faces and metadata.
  bool same_faces(const SimplicialComplex& other) const;

 private:
  int vertex_slots_ = 0;
  std::vector<FaceTable> levels_;  // levels_[d + 1] has width d + 1
  bool complete_ = false;
  Labeling labeling_;

  friend SimplicialComplex filter_faces(const SimplicialComplex&, int,
                                        const std::function<bool(std::span<const Vertex>)>&,
                                        bool);
  friend SimplicialComplex read_faces(std::istream&, const Limits&);
};

// Faces of `x` through `max_dim` passing `keep`; the result is complete when
// `complete` is set. Helper for star/link/induced/skeleton.
SimplicialComplex filter_faces(const SimplicialComplex& x, int max_dim,
                               const std::function<bool(std::span<const Vertex>)>& keep,
                               bool complete);

// Faces s with s ∪ {v} in x. When x is truncated, the result is
// materialized one dimension lower. Throws PreconditionError if {v} ∉ x.
SimplicialComplex star(const SimplicialComplex& x, Vertex v);
SimplicialComplex link(const SimplicialComplex& x, Vertex v);
SimplicialComplex induced(const SimplicialComplex& x, std::span<const Vertex> keep);
SimplicialComplex skeleton(const SimplicialComplex& x, int d);

// Independent sets of size <= max_dim + 1 on the non-loop elements.
SimplicialComplex as_complex(const Matroid& m, int max_dim, const Limits& limits = {});

// Complexes over a shared index space; the result is labeled with
// factors.size() copies. `max_dim` caps materialization; it is lowered
// further when a truncated factor cannot decide larger faces.
SimplicialComplex join(std::span<const SimplicialComplex> factors, int max_dim,
                       const Limits& limits = {});
SimplicialComplex deleted_join(std::span<const SimplicialComplex> factors, int max_dim,
                               const Limits& limits = {});
SimplicialComplex power_deleted_join(const SimplicialComplex& x, int k, int max_dim,
                                     const Limits& limits = {});

// The deleted join of matroids, built from their independence oracles.
SimplicialComplex matroid_deleted_join(std::span<const Matroid> factors, int max_dim,
                                       const Limits& limits = {});

// Rook placements on a k x m board; vertex (row, column) is row * m + column.
SimplicialComplex chessboard(int k, int m, int max_dim = -2, const Limits& limits = {});

// Partition matroid with d + 1 colour classes of r elements, element
// class * r + i, at most one element per class.
Matroid colourful_complex(int r, int d);

// (copy i, v) -> (copy (i + 1) mod k, v), re-sorted.
std::vector<Vertex> cyclic_shift(std::span<const Vertex> face, const Labeling& labeling);

// True iff no nonempty materialized face is invariant under a nontrivial
// power of the cyclic shift. Requires a labeled complex.
bool is_action_free(const SimplicialComplex& x);

// Text export: "format-version 1" header, "#" metadata lines, then one face
// per line as sorted vertex ids, by dimension then lexicographically.
void write_faces(std::ostream& out, const SimplicialComplex& x);
SimplicialComplex read_faces(std::istream& in, const Limits& limits = {});

}  // namespace mtv

#endif  // MTV_COMPLEX_HPP_
