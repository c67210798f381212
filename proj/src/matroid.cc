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

#include "mtv/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "mtv/errors.hpp"
#include "mtv/exact_rank.hpp"

namespace mtv {
namespace {

constexpr int kMaxExplicitSize = 64;
constexpr std::size_t kMaxExplicitFamily = 1 << 20;

std::uint64_t mask_of(std::span<const Element> s) {
  std::uint64_t m = 0;
  for (Element e : s) m |= std::uint64_t{1} << e;
  return m;
}

FaceSet from_mask(std::uint64_t m) {
  FaceSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

FaceSet make_face_set(std::vector<Element> ids, int n) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (Element e : ids) {
    if (e < 0 || e >= n) {
      throw InputError("element id " + std::to_string(e) + " out of range [0," +
                       std::to_string(n) + ")");
    }
  }
  return ids;
}

std::vector<FaceSet> subsets_by_size(const FaceSet& ids) {
  std::vector<FaceSet> out;
  const int n = static_cast<int>(ids.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      FaceSet s;
      for (int i : idx) s.push_back(ids[i]);
      out.push_back(std::move(s));
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::optional<ExchangeViolation> validate_matroid(const ExplicitSpec& spec) {
  std::unordered_set<std::uint64_t> family;
  for (const FaceSet& top : spec.maximal) {
    const std::uint64_t m = mask_of(top);
    // Enumerate all submasks of m.
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      family.insert(sub);
      if (family.size() > kMaxExplicitFamily) {
        throw InputError("explicit matroid has too many independent sets to validate");
      }
      if (sub == 0) break;
    }
  }
  std::vector<FaceSet> sets;
  sets.reserve(family.size());
  for (std::uint64_t m : family) sets.push_back(from_mask(m));
  std::sort(sets.begin(), sets.end(), [](const FaceSet& a, const FaceSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  // By size class; exchange between consecutive sizes implies the general axiom.
  std::vector<std::size_t> start(1, 0);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].size() != sets[i - 1].size()) start.push_back(i);
  }
  start.push_back(sets.size());
  for (std::size_t cls = 0; cls + 2 < start.size(); ++cls) {
    for (std::size_t i = start[cls]; i < start[cls + 1]; ++i) {
      const std::uint64_t im = mask_of(sets[i]);
      for (std::size_t j = start[cls + 1]; j < start[cls + 2]; ++j) {
        std::uint64_t extra = mask_of(sets[j]) & ~im;
        bool ok = false;
        while (extra && !ok) {
          const std::uint64_t bit = extra & (~extra + 1);
          ok = family.count(im | bit) > 0;
          extra &= extra - 1;
        }
        if (!ok) return ExchangeViolation{sets[i], sets[j]};
      }
    }
  }
  return std::nullopt;
}

Matroid::Matroid(MatroidSpec spec) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
  };
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          need(s.size >= 0 && s.rank >= 0 && s.rank <= s.size,
               "uniform matroid needs 0 <= rank <= size");
          size_ = s.size;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          need(s.vertex_count >= 0, "graphic matroid needs a nonnegative vertex count");
          for (auto [u, v] : s.edges) {
            need(u >= 0 && v >= 0 && u < s.vertex_count && v < s.vertex_count,
                 "graphic edge endpoint out of range");
          }
          size_ = static_cast<int>(s.edges.size());
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          if (!s.rows.empty()) s.size = static_cast<int>(s.rows[0].size());
          for (const auto& row : s.rows) {
            need(static_cast<int>(row.size()) == s.size, "linear matroid rows differ in length");
          }
          if (s.field == Field::kPrime) {
            need(is_prime(s.prime), "linear matroid field size must be prime");
            for (const auto& row : s.rows) {
              for (const Rational& q : row) {
                need(mpz_divisible_ui_p(q.get_den().get_mpz_t(), s.prime) == 0,
                     "entry denominator not invertible in the prime field");
              }
            }
          }
          size_ = s.size;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          need(s.size >= 0, "partition matroid needs a nonnegative size");
          need(s.blocks.size() == s.capacities.size(),
               "partition matroid needs one capacity per block");
          std::vector<char> seen(s.size, 0);
          for (auto& block : s.blocks) {
            block = make_face_set(block, s.size);
            for (Element e : block) {
              need(!seen[e], "partition blocks overlap");
              seen[e] = 1;
            }
          }
          for (int c : s.capacities) need(c >= 0, "partition capacity must be nonnegative");
          size_ = s.size;
        } else {
          need(s.size >= 0 && s.size <= kMaxExplicitSize,
               "explicit matroid size must be in [0, 64]");
          need(!s.maximal.empty(), "explicit matroid needs at least one independent set");
          for (auto& f : s.maximal) f = make_face_set(f, s.size);
          if (auto bad = validate_matroid(s)) {
            auto str = [](const FaceSet& f) {
              std::string out = "{";
              for (std::size_t i = 0; i < f.size(); ++i) {
                out += (i ? "," : "") + std::to_string(f[i]);
              }
              return out + "}";
            };
            throw InputError("explicit sets violate the exchange axiom: " + str(bad->smaller) +
                             " cannot be extended from " + str(bad->larger));
          }
          size_ = s.size;
        }
      },
      spec);
  spec_ = std::make_shared<const MatroidSpec>(std::move(spec));
  deleted_.assign(size_, 0);
  precompute();
}

void Matroid::precompute() {
  if (const auto* lin = std::get_if<LinearSpec>(spec_.get())) {
    const std::size_t rows = lin->rows.size();
    if (lin->field == Field::kRational) {
      int_columns_.assign(size_, std::vector<BigInt>(rows));
      for (int j = 0; j < size_; ++j) {
        BigInt scale = 1;
        for (std::size_t i = 0; i < rows; ++i) {
          mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), lin->rows[i][j].get_den_mpz_t());
        }
        for (std::size_t i = 0; i < rows; ++i) {
          int_columns_[j][i] = lin->rows[i][j].get_num() * (scale / lin->rows[i][j].get_den());
        }
      }
    } else {
      const std::uint64_t p = lin->prime;
      mod_columns_.assign(size_, std::vector<std::uint64_t>(rows));
      BigInt pz(std::to_string(p), 10);
      for (int j = 0; j < size_; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
          BigInt num = lin->rows[i][j].get_num() % pz;
          if (num < 0) num += pz;
          BigInt den = lin->rows[i][j].get_den() % pz;
          const std::uint64_t n = std::stoull(num.get_str());
          const std::uint64_t d = std::stoull(den.get_str());
          mod_columns_[j][i] = static_cast<unsigned __int128>(n) * inverse_mod(d, p) % p;
        }
      }
    }
  } else if (const auto* ex = std::get_if<ExplicitSpec>(spec_.get())) {
    for (const FaceSet& f : ex->maximal) explicit_masks_.push_back(mask_of(f));
  } else if (const auto* part = std::get_if<PartitionSpec>(spec_.get())) {
    block_of_.assign(size_, -1);
    for (std::size_t b = 0; b < part->blocks.size(); ++b) {
      for (Element e : part->blocks[b]) block_of_[e] = static_cast<int>(b);
    }
  }
  std::vector<Element> all(size_);
  std::iota(all.begin(), all.end(), 0);
  full_rank_ = rank(all);
}

Matroid Matroid::uniform(int rank, int size) { return Matroid(UniformSpec{rank, size}); }

Matroid Matroid::graphic(int vertex_count, std::vector<std::pair<int, int>> edges) {
  return Matroid(GraphicSpec{vertex_count, std::move(edges)});
}

Matroid Matroid::partition(int size, std::vector<FaceSet> blocks, std::vector<int> capacities) {
  return Matroid(PartitionSpec{size, std::move(blocks), std::move(capacities)});
}

Matroid Matroid::explicit_sets(int size, std::vector<FaceSet> maximal) {
  return Matroid(ExplicitSpec{size, std::move(maximal)});
}

void Matroid::check_ids(std::span<const Element> s) const {
  for (Element e : s) {
    if (e < 0 || e >= size_) {
      throw InputError("element id " + std::to_string(e) + " out of range [0," +
                       std::to_string(size_) + ")");
    }
  }
}

int Matroid::linear_rank(std::span<const Element> a) const {
  if (a.empty()) return 0;
  if (!int_columns_.empty()) {
    const std::size_t rows = int_columns_[0].size();
    IntMatrix m(a.size(), std::vector<BigInt>(rows));
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = int_columns_[a[i]];
    return rank_fraction_free(std::move(m));
  }
  if (!mod_columns_.empty()) {
    ModMatrix m;
    m.reserve(a.size());
    for (Element e : a) m.push_back(mod_columns_[e]);
    return rank_mod_p(std::move(m), std::get<LinearSpec>(*spec_).prime);
  }
  return 0;
}

// Rank in the underlying spec; `a` holds distinct in-range ids.
int Matroid::spec_rank(std::span<const Element> a) const {
  return std::visit(
      [&](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return std::min<int>(s.rank, static_cast<int>(a.size()));
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          UnionFind uf(s.vertex_count);
          int r = 0;
          for (Element e : a) r += uf.unite(s.edges[e].first, s.edges[e].second);
          return r;
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          return linear_rank(a);
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          std::vector<int> used(s.blocks.size(), 0);
          int r = 0;
          for (Element e : a) {
            const int b = block_of_[e];
            if (b >= 0 && used[b] < s.capacities[b]) {
              ++used[b];
              ++r;
            }
          }
          return r;
        } else {
          const std::uint64_t m = mask_of(a);
          int best = 0;
          for (std::uint64_t top : explicit_masks_) best = std::max(best, std::popcount(m & top));
          return best;
        }
      },
      *spec_);
}

int Matroid::rank(std::span<const Element> a) const {
  check_ids(a);
  std::vector<Element> work;
  work.reserve(a.size() + contracted_.size());
  std::vector<char> seen(size_, 0);
  for (Element e : a) {
    if (seen[e]) throw InputError("duplicate element id " + std::to_string(e));
    seen[e] = 1;
    if (!deleted_[e]) work.push_back(e);
  }
  if (contracted_.empty()) return spec_rank(work);
  // Contracted elements are also marked deleted, so none of them came from `a`.
  work.insert(work.end(), contracted_.begin(), contracted_.end());
  return spec_rank(work) - static_cast<int>(contracted_.size());
}

bool Matroid::is_independent(std::span<const Element> s) const {
  return rank(s) == static_cast<int>(s.size());
}

bool Matroid::is_loop(Element e) const {
  const Element one[] = {e};
  return rank(one) == 0;
}

std::vector<Element> Matroid::non_loops() const {
  std::vector<Element> out;
  for (Element e = 0; e < size_; ++e) {
    if (!is_loop(e)) out.push_back(e);
  }
  return out;
}

Matroid Matroid::restrict(std::span<const Element> keep) const {
  check_ids(keep);
  Matroid out(*this);
  std::vector<char> kept(size_, 0);
  for (Element e : keep) kept[e] = 1;
  for (Element e = 0; e < size_; ++e) {
    if (!kept[e] && !out.deleted_[e]) {
      out.deleted_[e] = 1;
      out.has_deleted_ = true;
    }
  }
  std::vector<Element> all(size_);
  std::iota(all.begin(), all.end(), 0);
  out.full_rank_ = out.rank(all);
  return out;
}

Matroid Matroid::contract_link(Element v) const {
  const Element one[] = {v};
  check_ids(one);
  if (is_loop(v)) {
    throw PreconditionError("cannot take the link of loop " + std::to_string(v));
  }
  Matroid out(*this);
  out.contracted_.insert(std::upper_bound(out.contracted_.begin(), out.contracted_.end(), v), v);
  out.deleted_[v] = 1;
  std::vector<Element> all(size_);
  std::iota(all.begin(), all.end(), 0);
  out.full_rank_ = out.rank(all);
  return out;
}

ExplicitSpec to_explicit(const Matroid& m) {
  ExplicitSpec out;
  out.size = m.size();
  const FaceSet live = m.non_loops();
  const int r = m.rank();
  for (FaceSet& s : subsets_by_size(live)) {
    if (static_cast<int>(s.size()) == r && m.is_independent(s)) out.maximal.push_back(std::move(s));
  }
  return out;
}

}  // namespace mtv
