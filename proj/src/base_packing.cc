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

#include "mtv/base_packing.hpp"

#include <algorithm>
#include <deque>

#include "mtv/errors.hpp"

namespace mtv {
namespace {

// k disjoint independent sets over a domain, grown one element at a time
// along shortest paths in the exchange digraph.
class MatroidUnion {
 public:
  MatroidUnion(const Matroid& m, FaceSet domain, std::vector<FaceSet> parts)
      : m_(m), domain_(std::move(domain)), parts_(std::move(parts)), owner_(m.size(), -1) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      for (Element e : parts_[i]) owner_[e] = static_cast<int>(i);
    }
  }

  void add_part() { parts_.emplace_back(); }

  // Augments until no path exists; returns the set reachable from the free
  // elements in the final state.
  FaceSet saturate() {
    FaceSet reached;
    while (augment(reached)) {
    }
    return reached;
  }

  std::size_t covered() const {
    std::size_t n = 0;
    for (const FaceSet& p : parts_) n += p.size();
    return n;
  }

  const std::vector<FaceSet>& parts() const { return parts_; }

 private:
  bool independent_with(const FaceSet& part, Element add, Element drop) {
    scratch_.clear();
    for (Element e : part) {
      if (e != drop) scratch_.push_back(e);
    }
    scratch_.push_back(add);
    return m_.is_independent(scratch_);
  }

  bool augment(FaceSet& reached) {
    const int n = m_.size();
    std::vector<int> parent(n, -2);  // -2 unvisited, -1 source
    std::deque<Element> queue;
    for (Element e : domain_) {
      if (owner_[e] < 0) {
        parent[e] = -1;
        queue.push_back(e);
      }
    }
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(parts_.size()); ++i) {
        if (owner_[x] == i) continue;
        if (independent_with(parts_[i], x, -1)) {
          apply(parent, x, i);
          return true;
        }
        for (Element y : parts_[i]) {
          if (parent[y] != -2) continue;
          if (independent_with(parts_[i], x, y)) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
    }
    reached.clear();
    for (Element e = 0; e < n; ++e) {
      if (parent[e] != -2) reached.push_back(e);
    }
    return false;
  }

  // Path x0 -> ... -> last; `last` enters part `sink`, every other path
  // element takes the slot of its successor.
  void apply(const std::vector<int>& parent, Element last, int sink) {
    std::vector<Element> path;
    for (Element e = last; e >= 0; e = parent[e]) path.push_back(e);
    std::reverse(path.begin(), path.end());
    std::vector<int> old_owner(path.size());
    for (std::size_t j = 0; j < path.size(); ++j) old_owner[j] = owner_[path[j]];
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      const int p = old_owner[j + 1];
      auto& part = parts_[p];
      part.erase(std::find(part.begin(), part.end(), path[j + 1]));
      part.insert(std::upper_bound(part.begin(), part.end(), path[j]), path[j]);
      owner_[path[j]] = p;
    }
    auto& part = parts_[sink];
    part.insert(std::upper_bound(part.begin(), part.end(), last), last);
    owner_[last] = sink;
  }

  const Matroid& m_;
  FaceSet domain_;
  std::vector<FaceSet> parts_;
  std::vector<int> owner_;
  std::vector<Element> scratch_;
};

FaceSet full_ground(const Matroid& m) {
  FaceSet all(m.size());
  for (int i = 0; i < m.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

bool certificate_holds(const Matroid& m, const PackingCertificate& cert) {
  const long k = cert.target;
  const long outside = m.size() - static_cast<long>(cert.witness.size());
  return k * m.rank(cert.witness) + outside < k * m.rank();
}

bool certificate_holds(const Matroid& m, const CoveringCertificate& cert) {
  return static_cast<long>(cert.parts) * m.rank(cert.witness) <
         static_cast<long>(cert.witness.size());
}

std::variant<BasePacking, PackingCertificate> pack_k_bases(const Matroid& m, int k) {
  if (k < 1) throw InputError("pack_k_bases needs k >= 1");
  MatroidUnion mu(m, full_ground(m), std::vector<FaceSet>(k));
  FaceSet reached = mu.saturate();
  if (mu.covered() == static_cast<std::size_t>(k) * m.rank()) {
    return BasePacking{mu.parts()};
  }
  return PackingCertificate{std::move(reached), k};
}

MaxPacking max_disjoint_bases(const Matroid& m) {
  MaxPacking out;
  if (m.rank() == 0) {
    out.degenerate = true;
    return out;
  }
  MatroidUnion mu(m, full_ground(m), {});
  for (int k = 1;; ++k) {
    mu.add_part();
    FaceSet reached = mu.saturate();
    if (mu.covered() < static_cast<std::size_t>(k) * m.rank()) {
      out.next_impossible = PackingCertificate{std::move(reached), k};
      return out;
    }
    out.count = k;
    out.packing.bases = mu.parts();
  }
}

std::variant<std::vector<FaceSet>, CoveringCertificate> pack_into_independent(
    const Matroid& m, const FaceSet& a, int parts) {
  if (parts < 1) throw InputError("pack_into_independent needs m >= 1");
  const FaceSet domain = make_face_set(a, m.size());
  MatroidUnion mu(m, domain, std::vector<FaceSet>(parts));
  FaceSet reached = mu.saturate();
  if (mu.covered() == domain.size()) {
    std::vector<FaceSet> out;
    for (const FaceSet& p : mu.parts()) {
      if (!p.empty()) out.push_back(p);
    }
    return out;
  }
  return CoveringCertificate{std::move(reached), parts};
}

std::optional<int> covering_number(const Matroid& m, const FaceSet& a) {
  for (Element e : a) {
    if (m.is_loop(e)) return std::nullopt;
  }
  for (int parts = 1;; ++parts) {
    if (std::holds_alternative<std::vector<FaceSet>>(pack_into_independent(m, a, parts))) {
      return parts;
    }
  }
}

std::vector<std::vector<int>> partition_almost_equal(int b, int k) {
  if (b < 0 || k < 1) throw InputError("partition_almost_equal needs b >= 0, k >= 1");
  std::vector<std::vector<int>> out(k);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    const int size = b / k + (i < b % k ? 1 : 0);
    for (int j = 0; j < size; ++j) out[i].push_back(next++);
  }
  return out;
}

}  // namespace mtv
