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

#include "mtv/complex.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "mtv/errors.hpp"

namespace mtv {
namespace {

constexpr int kUnbounded = INT_MAX / 2;

int effective_max_dim(int max_dim) { return max_dim < -1 ? kUnbounded : max_dim; }

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Extensions of parent[begin, end) by larger vertices that pass the oracle.
FaceTable extend_range(const FaceTable& parent, std::size_t begin, std::size_t end,
                       const std::vector<Vertex>& vertices, const FaceOracle& oracle,
                       const Limits& limits, std::size_t stop_after) {
  FaceTable out(parent.width() + 1);
  std::vector<Vertex> candidate(parent.width() + 1);
  for (std::size_t i = begin; i < end; ++i) {
    if ((i & 0xfff) == 0) limits.check_deadline();
    const auto face = parent[i];
    std::copy(face.begin(), face.end(), candidate.begin());
    auto it = face.empty() ? vertices.begin()
                           : std::upper_bound(vertices.begin(), vertices.end(), face.back());
    for (; it != vertices.end(); ++it) {
      candidate.back() = *it;
      if (oracle(candidate)) {
        out.push_back(candidate);
        if (out.size() >= stop_after) return out;
      }
    }
  }
  return out;
}

FaceTable extend_level(const FaceTable& parent, const std::vector<Vertex>& vertices,
                       const FaceOracle& oracle, const Limits& limits, int dim) {
  const std::size_t cap = limits.max_faces;
  const int threads = std::max(1, limits.threads);
  auto over_cap = [&](std::size_t n) {
    if (n > cap) {
      throw ResourceLimitError("face count at dimension " + std::to_string(dim) +
                                   " exceeds cap " + std::to_string(cap),
                               n);
    }
  };
  if (threads == 1 || parent.size() < 64) {
    FaceTable out = extend_range(parent, 0, parent.size(), vertices, oracle, limits, cap + 1);
    over_cap(out.size());
    return out;
  }
  // Contiguous chunks concatenated in order keep the canonical order.
  std::vector<FaceTable> parts(threads, FaceTable(parent.width() + 1));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (parent.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t b = std::min(parent.size(), t * chunk);
        const std::size_t e = std::min(parent.size(), b + chunk);
        parts[t] = extend_range(parent, b, e, vertices, oracle, limits, cap + 1);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  FaceTable out(parent.width() + 1);
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.size();
    over_cap(total);
    out.append(p);
  }
  return out;
}

std::vector<Element> as_elements(std::span<const Vertex> face) {
  return {face.begin(), face.end()};
}

}  // namespace

std::int64_t FaceTable::find(std::span<const Vertex> face) const {
  if (static_cast<int>(face.size()) != width_) return -1;
  if (width_ == 0) return count_ > 0 ? 0 : -1;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_less((*this)[mid], face)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(face.begin(), face.end(), (*this)[lo].begin())) {
    return static_cast<std::int64_t>(lo);
  }
  return -1;
}

void FaceTable::push_back(std::span<const Vertex> face) {
  if (width_ == 0) {
    ++count_;
    return;
  }
  data_.insert(data_.end(), face.begin(), face.end());
}

void FaceTable::append(const FaceTable& other) {
  count_ += other.count_;
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
}

void FaceTable::sort_unique() {
  if (width_ == 0) {
    count_ = std::min<std::size_t>(count_, 1);
    return;
  }
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less((*this)[a], (*this)[b]); });
  std::vector<Vertex> sorted;
  sorted.reserve(data_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto f = (*this)[order[k]];
    if (k > 0 && std::equal(f.begin(), f.end(), (*this)[order[k - 1]].begin())) continue;
    sorted.insert(sorted.end(), f.begin(), f.end());
  }
  data_ = std::move(sorted);
}

SimplicialComplex SimplicialComplex::from_oracle(int vertex_slots,
                                                 const std::vector<Vertex>& vertices,
                                                 const FaceOracle& oracle, int max_dim,
                                                 const Limits& limits, Labeling labeling) {
  SimplicialComplex x;
  x.vertex_slots_ = vertex_slots;
  x.labeling_ = labeling;
  max_dim = effective_max_dim(max_dim);
  FaceTable empty(0);
  empty.push_back({});
  x.levels_.push_back(std::move(empty));

  std::vector<Vertex> live;
  for (Vertex v : vertices) {
    if (v >= static_cast<Vertex>(vertex_slots)) throw InputError("vertex id out of range");
    const Vertex one[] = {v};
    if (oracle(one)) live.push_back(v);
  }
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  if (max_dim < 0) {
    x.complete_ = live.empty();
    return x;
  }
  if (live.size() > limits.max_faces) {
    throw ResourceLimitError("vertex count exceeds face cap", live.size());
  }
  FaceTable level0(1);
  for (Vertex v : live) {
    const Vertex one[] = {v};
    level0.push_back(one);
  }
  x.levels_.push_back(std::move(level0));
  for (int dim = 1; dim <= max_dim; ++dim) {
    FaceTable next = extend_level(x.levels_.back(), live, oracle, limits, dim);
    if (next.size() == 0) {
      x.complete_ = true;
      return x;
    }
    x.levels_.push_back(std::move(next));
  }
  // Probe one dimension up for completeness.
  const FaceTable& top = x.levels_.back();
  Limits probe = limits;
  probe.threads = 1;
  x.complete_ = extend_range(top, 0, top.size(), live, oracle, probe, 1).size() == 0;
  return x;
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_slots,
                                                 const std::vector<std::vector<Vertex>>& facets,
                                                 int max_dim, const Limits& limits) {
  max_dim = effective_max_dim(max_dim);
  SimplicialComplex x;
  x.vertex_slots_ = vertex_slots;
  x.levels_.emplace_back(0);
  x.levels_[0].push_back({});
  int top = -1;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    for (Vertex v : facet) {
      if (v >= static_cast<Vertex>(vertex_slots)) throw InputError("vertex id out of range");
    }
    if (facet.size() > 30) throw ResourceLimitError("facet too large to close downward");
    top = std::max(top, static_cast<int>(facet.size()) - 1);
    const int limit = std::min<int>(static_cast<int>(facet.size()) - 1, max_dim);
    while (static_cast<int>(x.levels_.size()) < limit + 2) {
      x.levels_.emplace_back(static_cast<int>(x.levels_.size()));
    }
    const std::uint32_t n = static_cast<std::uint32_t>(facet.size());
    std::vector<Vertex> sub;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const int k = std::popcount(mask);
      if (k - 1 > limit) continue;
      sub.clear();
      for (std::uint32_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(facet[i]);
      }
      x.levels_[k].push_back(sub);
    }
  }
  for (std::size_t i = 1; i < x.levels_.size(); ++i) {
    x.levels_[i].sort_unique();
    if (x.levels_[i].size() > limits.max_faces) {
      throw ResourceLimitError("face count exceeds cap", x.levels_[i].size());
    }
  }
  x.complete_ = top <= x.max_dim();
  return x;
}

bool SimplicialComplex::contains(std::span<const Vertex> face) const {
  const int dim = static_cast<int>(face.size()) - 1;
  if (dim > max_dim()) {
    if (complete_) return false;
    throw PreconditionError("face dimension " + std::to_string(dim) +
                            " exceeds materialized dimension " + std::to_string(max_dim()));
  }
  return levels_[dim + 1].find(face) >= 0;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  if (max_dim() < 0) return out;
  for (std::size_t i = 0; i < levels_[1].size(); ++i) out.push_back(levels_[1][i][0]);
  return out;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (const auto& level : levels_) f.counts.push_back(level.size());
  return f;
}

int SimplicialComplex::dimension() const {
  for (int d = max_dim(); d >= 0; --d) {
    if (faces(d).size() > 0) return d;
  }
  return -1;
}

bool SimplicialComplex::same_faces(const SimplicialComplex& other) const {
  if (max_dim() != other.max_dim() || vertex_slots_ != other.vertex_slots_) return false;
  for (int d = 0; d <= max_dim(); ++d) {
    const FaceTable& a = faces(d);
    const FaceTable& b = other.faces(d);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!std::equal(a[i].begin(), a[i].end(), b[i].begin())) return false;
    }
  }
  return true;
}

SimplicialComplex filter_faces(const SimplicialComplex& x, int max_dim,
                               const std::function<bool(std::span<const Vertex>)>& keep,
                               bool complete) {
  SimplicialComplex out;
  out.vertex_slots_ = x.vertex_slots_;
  out.labeling_ = x.labeling_;
  out.complete_ = complete;
  out.levels_.emplace_back(0);
  out.levels_[0].push_back({});
  const int top = std::min(max_dim, x.max_dim());
  for (int d = 0; d <= top; ++d) {
    FaceTable level(d + 1);
    const FaceTable& src = x.faces(d);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (keep(src[i])) level.push_back(src[i]);
    }
    out.levels_.push_back(std::move(level));
  }
  // Trailing empty levels carry no information once complete.
  while (out.complete_ && out.levels_.size() > 1 && out.levels_.back().size() == 0) {
    out.levels_.pop_back();
  }
  return out;
}

namespace {

void require_vertex(const SimplicialComplex& x, Vertex v) {
  const Vertex one[] = {v};
  if (x.max_dim() < 0 || !x.contains(one)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the complex");
  }
}

// Looks up face ∪ {v} without allocating when possible.
bool contains_with(const SimplicialComplex& x, std::span<const Vertex> face, Vertex v) {
  std::vector<Vertex> joined(face.begin(), face.end());
  auto it = std::lower_bound(joined.begin(), joined.end(), v);
  if (it == joined.end() || *it != v) joined.insert(it, v);
  return x.contains(joined);
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& x, Vertex v) {
  require_vertex(x, v);
  const int top = x.complete() ? x.max_dim() : x.max_dim() - 1;
  return filter_faces(
      x, top, [&](std::span<const Vertex> f) { return contains_with(x, f, v); }, x.complete());
}

SimplicialComplex link(const SimplicialComplex& x, Vertex v) {
  require_vertex(x, v);
  const int top = x.complete() ? x.max_dim() : x.max_dim() - 1;
  return filter_faces(
      x, top,
      [&](std::span<const Vertex> f) {
        return !std::binary_search(f.begin(), f.end(), v) && contains_with(x, f, v);
      },
      x.complete());
}

SimplicialComplex induced(const SimplicialComplex& x, std::span<const Vertex> keep) {
  std::vector<char> allowed(x.vertex_slots(), 0);
  for (Vertex v : keep) {
    if (v >= static_cast<Vertex>(x.vertex_slots())) throw InputError("vertex id out of range");
    allowed[v] = 1;
  }
  return filter_faces(
      x, x.max_dim(),
      [&](std::span<const Vertex> f) {
        return std::all_of(f.begin(), f.end(), [&](Vertex v) { return allowed[v] != 0; });
      },
      x.complete());
}

SimplicialComplex skeleton(const SimplicialComplex& x, int d) {
  if (d < -1) throw InputError("skeleton dimension must be >= -1");
  return filter_faces(
      x, d, [](std::span<const Vertex>) { return true; }, x.complete() || d <= x.max_dim());
}

SimplicialComplex as_complex(const Matroid& m, int max_dim, const Limits& limits) {
  if (max_dim < -1) throw InputError("as_complex needs max_dim >= -1");
  std::vector<Vertex> vertices;
  for (Element e : m.non_loops()) vertices.push_back(static_cast<Vertex>(e));
  return SimplicialComplex::from_oracle(
      m.size(), vertices,
      [&m](std::span<const Vertex> f) { return m.is_independent(as_elements(f)); }, max_dim,
      limits);
}

namespace {

SimplicialComplex join_impl(std::span<const SimplicialComplex> factors, int max_dim,
                            const Limits& limits, bool deleted) {
  if (factors.empty()) throw InputError("join needs at least one factor");
  const int n = factors[0].vertex_slots();
  int top = effective_max_dim(max_dim);
  for (const auto& f : factors) {
    if (f.vertex_slots() != n) throw InputError("join factors must share the element space");
    if (!f.complete()) top = std::min(top, f.max_dim());
  }
  const int k = static_cast<int>(factors.size());
  const Labeling lab{k, n};
  std::vector<Vertex> vertices;
  for (int c = 0; c < k; ++c) {
    for (Vertex v : factors[c].vertices()) vertices.push_back(lab.encode({c, static_cast<Element>(v)}));
  }
  auto oracle = [&factors, lab, n, deleted](std::span<const Vertex> face) {
    std::vector<Vertex> part;
    std::vector<char> used;
    if (deleted) used.assign(n, 0);
    std::size_t i = 0;
    while (i < face.size()) {
      const int copy = lab.decode(face[i]).copy;
      part.clear();
      for (; i < face.size() && lab.decode(face[i]).copy == copy; ++i) {
        const Vertex e = static_cast<Vertex>(lab.decode(face[i]).element);
        if (deleted) {
          if (used[e]) return false;
          used[e] = 1;
        }
        part.push_back(e);
      }
      if (!factors[copy].contains(part)) return false;
    }
    return true;
  };
  return SimplicialComplex::from_oracle(k * n, vertices, oracle, top, limits, lab);
}

}  // namespace

SimplicialComplex join(std::span<const SimplicialComplex> factors, int max_dim,
                       const Limits& limits) {
  return join_impl(factors, max_dim, limits, false);
}

SimplicialComplex deleted_join(std::span<const SimplicialComplex> factors, int max_dim,
                               const Limits& limits) {
  return join_impl(factors, max_dim, limits, true);
}

SimplicialComplex power_deleted_join(const SimplicialComplex& x, int k, int max_dim,
                                     const Limits& limits) {
  if (k < 1) throw InputError("deleted join power needs k >= 1");
  std::vector<SimplicialComplex> factors(k, x);
  return deleted_join(factors, max_dim, limits);
}

SimplicialComplex matroid_deleted_join(std::span<const Matroid> factors, int max_dim,
                                       const Limits& limits) {
  if (factors.empty()) throw InputError("deleted join needs at least one factor");
  const int n = factors[0].size();
  for (const auto& m : factors) {
    if (m.size() != n) throw InputError("deleted join factors must share the ground set");
  }
  const int k = static_cast<int>(factors.size());
  const Labeling lab{k, n};
  std::vector<Vertex> vertices;
  for (int c = 0; c < k; ++c) {
    for (Element e : factors[c].non_loops()) vertices.push_back(lab.encode({c, e}));
  }
  auto oracle = [&factors, lab, n](std::span<const Vertex> face) {
    std::vector<Element> part;
    std::vector<char> used(n, 0);
    std::size_t i = 0;
    while (i < face.size()) {
      const int copy = lab.decode(face[i]).copy;
      part.clear();
      for (; i < face.size() && lab.decode(face[i]).copy == copy; ++i) {
        const Element e = lab.decode(face[i]).element;
        if (used[e]) return false;
        used[e] = 1;
        part.push_back(e);
      }
      if (!factors[copy].is_independent(part)) return false;
    }
    return true;
  };
  return SimplicialComplex::from_oracle(k * n, vertices, oracle, max_dim, limits, lab);
}

SimplicialComplex chessboard(int k, int m, int max_dim, const Limits& limits) {
  if (k < 1 || m < 1) throw InputError("chessboard needs k >= 1 and m >= 1");
  std::vector<Vertex> vertices(static_cast<std::size_t>(k) * m);
  std::iota(vertices.begin(), vertices.end(), 0);
  auto oracle = [k, m](std::span<const Vertex> face) {
    std::vector<char> rows(k, 0);
    std::vector<char> cols(m, 0);
    for (Vertex v : face) {
      const int r = static_cast<int>(v) / m;
      const int c = static_cast<int>(v) % m;
      if (rows[r] || cols[c]) return false;
      rows[r] = cols[c] = 1;
    }
    return true;
  };
  return SimplicialComplex::from_oracle(k * m, vertices, oracle, max_dim, limits, Labeling{k, m});
}

Matroid colourful_complex(int r, int d) {
  if (r < 1 || d < 0) throw InputError("colourful complex needs r >= 1 and d >= 0");
  std::vector<FaceSet> blocks(d + 1);
  for (int c = 0; c <= d; ++c) {
    for (int i = 0; i < r; ++i) blocks[c].push_back(c * r + i);
  }
  return Matroid::partition((d + 1) * r, std::move(blocks), std::vector<int>(d + 1, 1));
}

std::vector<Vertex> cyclic_shift(std::span<const Vertex> face, const Labeling& labeling) {
  if (labeling.copies < 1) throw PreconditionError("cyclic shift needs a labeled complex");
  std::vector<Vertex> out;
  out.reserve(face.size());
  for (Vertex v : face) {
    LabeledVertex lv = labeling.decode(v);
    lv.copy = (lv.copy + 1) % labeling.copies;
    out.push_back(labeling.encode(lv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_action_free(const SimplicialComplex& x) {
  const Labeling& lab = x.labeling();
  if (lab.copies < 1) throw PreconditionError("action freeness needs a labeled complex");
  for (int d = 0; d <= x.max_dim(); ++d) {
    const FaceTable& level = x.faces(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      std::vector<Vertex> image(level[i].begin(), level[i].end());
      for (int s = 1; s < lab.copies; ++s) {
        image = cyclic_shift(image, lab);
        if (std::equal(image.begin(), image.end(), level[i].begin())) return false;
      }
    }
  }
  return true;
}

void write_faces(std::ostream& out, const SimplicialComplex& x) {
  out << "format-version 1\n";
  out << "# vertex-slots " << x.vertex_slots() << "\n";
  out << "# max-dim " << x.max_dim() << "\n";
  out << "# complete " << (x.complete() ? "yes" : "no") << "\n";
  if (x.labeling().copies > 0) {
    out << "# labeling " << x.labeling().copies << " " << x.labeling().elements << "\n";
  }
  for (int d = 0; d <= x.max_dim(); ++d) {
    const FaceTable& level = x.faces(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto f = level[i];
      for (std::size_t j = 0; j < f.size(); ++j) out << (j ? " " : "") << f[j];
      out << "\n";
    }
  }
}

SimplicialComplex read_faces(std::istream& in, const Limits& limits) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("format-version", 0) != 0) {
    throw InputError("faces file must start with a format-version line");
  }
  {
    std::istringstream head(line.substr(14));
    int version = 0;
    if (!(head >> version) || version != 1) throw InputError("unsupported faces format version");
  }
  int slots = -1;
  int max_dim = -2;
  int complete = -1;
  Labeling lab;
  std::vector<std::vector<Vertex>> faces;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key;
      ls >> hash >> key;
      if (key == "vertex-slots") {
        ls >> slots;
      } else if (key == "max-dim") {
        ls >> max_dim;
      } else if (key == "complete") {
        std::string v;
        ls >> v;
        complete = v == "yes" ? 1 : 0;
      } else if (key == "labeling") {
        ls >> lab.copies >> lab.elements;
      }
      if (ls.fail()) throw InputError("malformed header line: " + line);
      continue;
    }
    std::vector<Vertex> face;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw InputError("negative vertex id in faces file");
      face.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw InputError("malformed face line: " + line);
    faces.push_back(std::move(face));
  }
  if (slots < 0) {
    slots = 0;
    for (const auto& f : faces) {
      for (Vertex v : f) slots = std::max<int>(slots, static_cast<int>(v) + 1);
    }
  }
  SimplicialComplex x = SimplicialComplex::from_facets(slots, faces, max_dim, limits);
  while (max_dim >= 0 && x.max_dim() < max_dim) x.levels_.emplace_back(x.max_dim() + 2);
  if (complete >= 0) x.complete_ = complete == 1;
  if (lab.copies > 0) {
    if (lab.copies * lab.elements != slots) throw InputError("labeling does not match vertex slots");
    x.labeling_ = lab;
  }
  return x;
}

}  // namespace mtv
