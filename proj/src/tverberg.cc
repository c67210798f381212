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

#include "mtv/tverberg.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "mtv/base_packing.hpp"
#include "mtv/complex.hpp"
#include "mtv/errors.hpp"
#include "mtv/lp.hpp"

namespace mtv {

const Point& PointConfig::at(Element e) const {
  if (e < 0 || e >= static_cast<Element>(coords.size()) || !coords[e]) {
    throw InputError("no coordinates for element " + std::to_string(e));
  }
  return *coords[e];
}

std::optional<HullIntersection> hulls_intersect(const std::vector<std::vector<Point>>& sets) {
  if (sets.empty()) throw InputError("hulls_intersect needs at least one set");
  const std::size_t d = sets[0].empty() ? 0 : sets[0][0].size();
  std::size_t vars = 0;
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("hulls_intersect needs nonempty sets");
    for (const auto& p : s) {
      if (p.size() != d) throw InputError("point dimension mismatch");
    }
    vars += s.size();
  }
  std::vector<std::size_t> offset(sets.size(), 0);
  for (std::size_t i = 1; i < sets.size(); ++i) offset[i] = offset[i - 1] + sets[i - 1].size();

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Rational> row(vars, 0);
    for (std::size_t j = 0; j < sets[i].size(); ++j) row[offset[i] + j] = 1;
    a.push_back(std::move(row));
    b.push_back(1);
  }
  // Barycenter of set i equals barycenter of set 0, coordinate by coordinate.
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Rational> row(vars, 0);
      for (std::size_t j = 0; j < sets[i].size(); ++j) row[offset[i] + j] = sets[i][j][c];
      for (std::size_t j = 0; j < sets[0].size(); ++j) row[j] = -sets[0][j][c];
      a.push_back(std::move(row));
      b.push_back(0);
    }
  }
  auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  HullIntersection out;
  out.point.assign(d, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Rational> lambda(sets[i].size());
    for (std::size_t j = 0; j < sets[i].size(); ++j) lambda[j] = (*x)[offset[i] + j];
    out.coefficients.push_back(std::move(lambda));
  }
  for (std::size_t j = 0; j < sets[0].size(); ++j) {
    for (std::size_t c = 0; c < d; ++c) out.point[c] += out.coefficients[0][j] * sets[0][j][c];
  }
  return out;
}

bool validate_witness(const Matroid& m, const PointConfig& cfg, const TverbergWitness& w,
                      std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.faces.size() != w.coefficients.size()) return fail("coefficient count mismatch");
  if (static_cast<int>(w.point.size()) != cfg.dim) return fail("point has wrong dimension");
  std::vector<char> used(m.size(), 0);
  for (std::size_t i = 0; i < w.faces.size(); ++i) {
    const FaceSet& f = w.faces[i];
    if (f.empty()) return fail("empty face");
    if (!std::is_sorted(f.begin(), f.end())) return fail("face not sorted");
    for (Element e : f) {
      if (e < 0 || e >= m.size()) return fail("element out of range");
      if (used[e]) return fail("faces not disjoint");
      used[e] = 1;
    }
    if (!m.is_independent(f)) return fail("face not independent");
    if (w.coefficients[i].size() != f.size()) return fail("coefficient length mismatch");
    Rational sum = 0;
    Point p(cfg.dim, 0);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Rational& l = w.coefficients[i][j];
      if (l < 0) return fail("negative coefficient");
      sum += l;
      const Point& x = cfg.at(f[j]);
      for (int c = 0; c < cfg.dim; ++c) p[c] += l * x[c];
    }
    if (sum != 1) return fail("coefficients do not sum to one");
    if (p != w.point) return fail("face does not reach the common point");
  }
  return true;
}

namespace {

struct Candidate {
  FaceSet face;
  std::vector<Point> points;
};

// Per-worker lexicographic search over tuples whose first face is `first`.
class TupleSearch {
 public:
  enum class Status { kExhausted, kWitness, kCapped, kAbandoned };

  TupleSearch(const std::vector<Candidate>& faces, int size, int t, const Limits& limits)
      : faces_(faces), used_(size, 0), chosen_(t), t_(t), limits_(limits) {}

  // Decides at most `budget` tuples; `count` receives the number decided.
  // Abandons the subtree once `best` drops below `first`.
  Status run(std::size_t first, std::uint64_t budget, std::uint64_t& count,
             const std::atomic<std::size_t>& best) {
    first_ = first;
    budget_ = budget;
    count_ = 0;
    best_ = &best;
    status_ = Status::kExhausted;
    chosen_[0] = first;
    mark(first, 1);
    if (t_ == 1) {
      decide();
    } else {
      descend(1, first + 1);
    }
    mark(first, 0);
    count = count_;
    return status_;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  const std::optional<HullIntersection>& hit() const { return hit_; }

 private:
  void mark(std::size_t f, char v) {
    for (Element e : faces_[f].face) used_[e] = v;
  }
  bool disjoint(std::size_t f) const {
    for (Element e : faces_[f].face) {
      if (used_[e]) return false;
    }
    return true;
  }
  // False stops the search; status_ says why.
  bool decide() {
    if (count_ >= budget_) {
      status_ = Status::kCapped;
      return false;
    }
    if ((count_ & 0x3ff) == 0x3ff) {
      limits_.check_deadline();
      if (best_->load(std::memory_order_relaxed) < first_) {
        status_ = Status::kAbandoned;
        return false;
      }
    }
    ++count_;
    std::vector<std::vector<Point>> sets;
    sets.reserve(t_);
    for (int i = 0; i < t_; ++i) sets.push_back(faces_[chosen_[i]].points);
    hit_ = hulls_intersect(sets);
    if (hit_) {
      status_ = Status::kWitness;
      return false;
    }
    return true;
  }
  bool descend(int depth, std::size_t from) {
    for (std::size_t f = from; f < faces_.size(); ++f) {
      if (!disjoint(f)) continue;
      chosen_[depth] = f;
      if (depth + 1 == t_) {
        if (!decide()) return false;
        continue;
      }
      mark(f, 1);
      const bool go_on = descend(depth + 1, f + 1);
      mark(f, 0);
      if (!go_on) return false;
    }
    return true;
  }

  const std::vector<Candidate>& faces_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
  int t_;
  const Limits& limits_;
  std::optional<HullIntersection> hit_;
  std::size_t first_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t count_ = 0;
  const std::atomic<std::size_t>* best_ = nullptr;
  Status status_ = Status::kExhausted;
};

}  // namespace

SearchResult find_tverberg(const Matroid& m, const PointConfig& cfg, int t, const Limits& limits) {
  if (t < 1) throw InputError("find_tverberg needs t >= 1");
  if (cfg.dim < 1) throw InputError("point configuration needs dimension >= 1");
  for (Element e : m.non_loops()) {
    if (cfg.at(e).size() != static_cast<std::size_t>(cfg.dim)) {
      throw InputError("point for element " + std::to_string(e) + " has wrong dimension");
    }
  }
  SearchResult result;
  result.rank_matches_dimension = m.rank() == cfg.dim + 1;

  const SimplicialComplex x = as_complex(m, cfg.dim, limits);
  std::vector<Candidate> faces;
  for (int d = 0; d <= x.max_dim(); ++d) {
    const FaceTable& level = x.faces(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      Candidate c;
      c.face.assign(level[i].begin(), level[i].end());
      for (Element e : c.face) c.points.push_back(cfg.at(e));
      faces.push_back(std::move(c));
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const Candidate& a, const Candidate& b) { return a.face < b.face; });
  result.candidate_faces = faces.size();

  // First faces are handled in blocks. Inside a block workers race, then the
  // block is replayed in canonical order, so the witness, the tuple count and
  // the cap all match a sequential search.
  using Status = TupleSearch::Status;
  const std::size_t n = faces.size();
  const int threads = std::max(1, limits.threads);
  const std::size_t block = static_cast<std::size_t>(threads) * 8;
  std::vector<TupleSearch> searches;
  for (int w = 0; w < threads; ++w) searches.emplace_back(faces, m.size(), t, limits);
  std::uint64_t examined = 0;
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t end = std::min(n, start + block);
    const std::uint64_t budget = limits.max_tuples - examined;
    std::vector<std::uint64_t> counts(end - start, 0);
    std::vector<Status> status(end - start, Status::kAbandoned);
    std::vector<std::optional<TverbergWitness>> found(end - start);
    std::atomic<std::size_t> next{start};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&](int w) {
      try {
        for (std::size_t f = next++; f < end; f = next++) {
          if (f > best.load()) break;
          const std::size_t i = f - start;
          status[i] = searches[w].run(f, budget, counts[i], best);
          if (status[i] == Status::kWitness) {
            TverbergWitness wit;
            for (std::size_t idx : searches[w].chosen()) wit.faces.push_back(faces[idx].face);
            wit.point = searches[w].hit()->point;
            wit.coefficients = searches[w].hit()->coefficients;
            found[i] = std::move(wit);
          }
          if (status[i] == Status::kWitness || status[i] == Status::kCapped) {
            std::size_t cur = best.load();
            while (f < cur && !best.compare_exchange_weak(cur, f)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        best = 0;
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < end - start; ++i) {
      if (status[i] == Status::kCapped || examined + counts[i] > limits.max_tuples) {
        throw ResourceLimitError("tuple cap of " + std::to_string(limits.max_tuples) +
                                     " reached without a witness",
                                 limits.max_tuples);
      }
      examined += counts[i];
      if (status[i] == Status::kWitness) {
        result.tuples_examined = examined;
        result.witness = std::move(found[i]);
        return result;
      }
    }
  }
  result.tuples_examined = examined;
  return result;
}

std::optional<std::int64_t> choose_prime(std::int64_t b) {
  if (b < 1) throw InputError("choose_prime needs b >= 1");
  // Largest p with 4p² <= b.
  std::int64_t p = 0;
  while (4 * (p + 1) * (p + 1) <= b) ++p;
  for (; p >= 1 && 16 * p * p >= b; --p) {
    if (is_prime(static_cast<std::uint64_t>(p))) return p;
  }
  return std::nullopt;
}

DoldInequality evaluate_dold_inequality(std::int64_t b, std::int64_t d, std::int64_t p) {
  if (b < 1 || d < 1 || p < 1) throw InputError("inequality needs b, d, p >= 1");
  DoldInequality out;
  out.lhs = Rational(b * (d + 1), ceil_div(b, p) + 1) - 2;
  out.lhs.canonicalize();
  out.rhs = (d + 1) * (p - 1) - 1;
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool dold_inequality_holds(std::int64_t b, std::int64_t d, std::int64_t p) {
  return evaluate_dold_inequality(b, d, p).holds;
}

std::int64_t theorem_target(std::int64_t b) {
  std::int64_t t = 0;
  while (16 * t * t < b) ++t;
  return t;
}

TheoremReport verify_theorem(const Matroid& m, const PointConfig& cfg, const Limits& limits) {
  if (m.rank() != cfg.dim + 1) {
    throw PreconditionError("theorem needs rank(M) = d + 1; rank is " + std::to_string(m.rank()) +
                            ", d is " + std::to_string(cfg.dim));
  }
  TheoremReport report;
  report.dim = cfg.dim;
  report.bases = max_disjoint_bases(m).count;
  report.target = theorem_target(report.bases);
  if (report.bases >= 1) {
    report.prime = choose_prime(report.bases);
    if (report.prime) {
      report.inequality = evaluate_dold_inequality(report.bases, cfg.dim, *report.prime);
    }
  }
  if (report.target == 0) {
    report.witness_found = true;
    return report;
  }
  report.search = find_tverberg(m, cfg, static_cast<int>(report.target), limits);
  report.witness_found = report.search.witness.has_value();
  report.falsification_candidate = !report.witness_found;
  return report;
}

MaxTResult max_affine_t(const Matroid& m, const PointConfig& cfg, int cap, const Limits& limits) {
  if (cap < 1) throw InputError("max_affine_t needs cap >= 1");
  MaxTResult out;
  for (int t = cap; t >= 1; --t) {
    SearchResult r = find_tverberg(m, cfg, t, limits);
    if (!r.witness) continue;
    out.t = t;
    // Any prefix of a witness is a witness for a smaller t.
    for (int s = t - 1; s >= 1; --s) {
      TverbergWitness prefix;
      prefix.faces.assign(r.witness->faces.begin(), r.witness->faces.begin() + s);
      prefix.coefficients.assign(r.witness->coefficients.begin(),
                                 r.witness->coefficients.begin() + s);
      prefix.point = r.witness->point;
      out.monotone = out.monotone && validate_witness(m, cfg, prefix);
    }
    out.witness = std::move(r.witness);
    return out;
  }
  return out;
}

PointConfig random_config(const std::vector<Element>& elements, int size, int dim,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 16);
  PointConfig cfg;
  cfg.dim = dim;
  cfg.coords.assign(size, std::nullopt);
  for (Element e : elements) {
    Point p;
    for (int c = 0; c < dim; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      p.push_back(q);
    }
    cfg.coords.at(e) = std::move(p);
  }
  return cfg;
}

}  // namespace mtv
