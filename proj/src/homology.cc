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

#include "mtv/homology.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <string>
#include <thread>

#include "mtv/errors.hpp"
#include "mtv/exact_rank.hpp"

namespace mtv {
namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct ModEntry {
  std::uint32_t row;
  std::uint64_t value;
};

struct BigEntry {
  std::uint32_t row;
  BigInt value;
};

// a - factor * b over GF(p), both sorted by row.
std::vector<ModEntry> axpy_mod(const std::vector<ModEntry>& a, const std::vector<ModEntry>& b,
                               std::uint64_t factor, std::uint64_t p) {
  std::vector<ModEntry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      out.push_back({b[j].row, (p - b[j].value * factor % p) % p});
      ++j;
    } else {
      const std::uint64_t v = (a[i].value + p - b[j].value * factor % p) % p;
      if (v != 0) out.push_back({a[i].row, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// scale_a * a - scale_b * b, then divided by the content.
std::vector<BigEntry> combine_exact(const std::vector<BigEntry>& a, const BigInt& scale_a,
                                    const std::vector<BigEntry>& b, const BigInt& scale_b) {
  std::vector<BigEntry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back({a[i].row, scale_a * a[i].value});
      ++i;
    } else if (i == a.size() || b[j].row < a[i].row) {
      out.push_back({b[j].row, -scale_b * b[j].value});
      ++j;
    } else {
      BigInt v = scale_a * a[i].value - scale_b * b[j].value;
      if (v != 0) out.push_back({a[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  BigInt g = 0;
  for (const auto& e : out) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& e : out) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace

void SparseIntMatrix::write_triplets(std::ostream& out) const {
  std::size_t nnz = 0;
  for (const auto& c : columns) nnz += c.size();
  out << "format-version 1\n";
  out << "rows " << rows << " cols " << cols() << " nnz " << nnz << "\n";
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [r, v] : columns[j]) out << r << " " << j << " " << v << "\n";
  }
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int i, int threads) {
  if (i < 0) throw PreconditionError("boundary index must be >= 0");
  if (i > x.max_dim()) {
    if (!x.complete()) {
      throw PreconditionError("boundary in dimension " + std::to_string(i) +
                              " needs faces beyond the truncation");
    }
    SparseIntMatrix empty;
    empty.rows = x.max_dim() >= i - 1 ? x.faces(i - 1).size() : 0;
    return empty;
  }
  const FaceTable& cols = x.faces(i);
  const FaceTable& rows = x.faces(i - 1);
  SparseIntMatrix m;
  m.rows = rows.size();
  m.columns.resize(cols.size());
  if (i == 0) {
    for (auto& c : m.columns) c.push_back({0, 1});
    return m;
  }
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (cols.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    std::vector<Vertex> facet(i);
    const std::size_t end = std::min(cols.size(), (chunk + 1) * kChunk);
    for (std::size_t c = chunk * kChunk; c < end; ++c) {
      const auto face = cols[c];
      auto& column = m.columns[c];
      for (int j = 0; j <= i; ++j) {
        std::size_t w = 0;
        for (int t = 0; t <= i; ++t) {
          if (t != j) facet[w++] = face[t];
        }
        const std::int64_t r = rows.find(facet);
        if (r < 0) throw PreconditionError("complex is not closed under taking faces");
        column.push_back({static_cast<std::uint32_t>(r), (j % 2 == 0) ? 1 : -1});
      }
      std::sort(column.begin(), column.end());
    }
  });
  return m;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  std::vector<std::int64_t> pivot(m.rows, -1);
  std::vector<std::vector<ModEntry>> reduced;
  for (const auto& column : m.columns) {
    std::vector<ModEntry> col;
    col.reserve(column.size());
    for (const auto& [r, v] : column) {
      const std::int64_t mod = ((v % static_cast<std::int64_t>(p)) + p) % p;
      if (mod != 0) col.push_back({r, static_cast<std::uint64_t>(mod)});
    }
    while (!col.empty()) {
      const std::uint32_t low = col.back().row;
      if (pivot[low] < 0) {
        // Normalize so the pivot entry is 1.
        const std::uint64_t inv = inverse_mod(col.back().value, p);
        for (auto& e : col) e.value = e.value * inv % p;
        pivot[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      col = axpy_mod(col, reduced[pivot[low]], col.back().value, p);
    }
  }
  return reduced.size();
}

std::size_t rank_rational(const SparseIntMatrix& m) {
  std::vector<std::int64_t> pivot(m.rows, -1);
  std::vector<std::vector<BigEntry>> reduced;
  for (const auto& column : m.columns) {
    std::vector<BigEntry> col;
    col.reserve(column.size());
    for (const auto& [r, v] : column) {
      if (v != 0) col.push_back({r, BigInt(v)});
    }
    while (!col.empty()) {
      const std::uint32_t low = col.back().row;
      if (pivot[low] < 0) {
        pivot[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const auto& pc = reduced[pivot[low]];
      const BigInt a = pc.back().value;
      const BigInt b = col.back().value;
      col = combine_exact(col, a, pc, b);
    }
  }
  return reduced.size();
}

BettiVector betti_reduced(const SimplicialComplex& x, int up_to, const HomologyOptions& opts) {
  if (up_to < -1) throw PreconditionError("betti_reduced needs up_to >= -1");
  if (!x.complete() && x.max_dim() < up_to + 1) {
    throw PreconditionError("complex must be materialized through dimension " +
                            std::to_string(up_to + 1));
  }
  BettiVector out;
  out.up_to = up_to;
  if (up_to < 0) return out;
  // rank of ∂_i for i = 0..up_to+1.
  const std::size_t count = static_cast<std::size_t>(up_to) + 2;
  std::vector<std::size_t> rank(count, 0);
  std::vector<char> exact(count, 0);
  std::vector<std::uint64_t> faces(count, 0);
  for (int d = 0; d <= up_to + 1; ++d) faces[d] = d <= x.max_dim() ? x.faces(d).size() : 0;
  std::vector<SparseIntMatrix> matrices(count);
  for (std::size_t i = 0; i < count; ++i) {
    matrices[i] = boundary_matrix(x, static_cast<int>(i), opts.threads);
  }
  parallel_for(count, opts.threads, [&](std::size_t i) {
    if (opts.always_exact) {
      rank[i] = rank_rational(matrices[i]);
      exact[i] = 1;
    } else {
      rank[i] = rank_mod_p(matrices[i]);
    }
  });
  auto betti = [&](int d) { return faces[d] - rank[d] - rank[d + 1]; };
  std::vector<std::size_t> confirm;
  for (int d = 0; d <= up_to; ++d) {
    if (betti(d) == 0) continue;
    for (std::size_t i : {static_cast<std::size_t>(d), static_cast<std::size_t>(d) + 1}) {
      if (!exact[i]) {
        exact[i] = 1;
        confirm.push_back(i);
      }
    }
  }
  parallel_for(confirm.size(), opts.threads,
               [&](std::size_t j) { rank[confirm[j]] = rank_rational(matrices[confirm[j]]); });
  for (int d = 0; d <= up_to; ++d) out.values.push_back(betti(d));
  out.exact_ranks = static_cast<int>(std::count(exact.begin(), exact.end(), 1));
  return out;
}

ConnectivityReport homologically_connected(const SimplicialComplex& x, int c,
                                           const HomologyOptions& opts) {
  ConnectivityReport report;
  report.bound = c;
  report.face_counts = x.f_vector();
  report.nonempty = x.max_dim() >= 0 && x.faces(0).size() > 0;
  if (c < -1) {
    report.verified = true;
    return report;
  }
  if (!report.nonempty) {
    report.first_nonvanishing = -1;
    return report;
  }
  const BettiVector b = betti_reduced(x, c, opts);
  report.betti = b.values;
  report.exact_ranks = b.exact_ranks;
  for (int d = 0; d <= std::min(c + 1, x.max_dim()); ++d) report.boundary_columns += x.faces(d).size();
  for (int d = 0; d <= c; ++d) {
    if (b.values[d] != 0) {
      report.first_nonvanishing = d;
      break;
    }
  }
  report.verified = !report.first_nonvanishing.has_value();
  return report;
}

ClaimReport verify_claim(std::span<const Matroid> matroids, std::span<const FaceSet> sets,
                         int parts, const Limits& limits, const HomologyOptions& opts) {
  if (matroids.empty() || matroids.size() != sets.size()) {
    throw InputError("verify_claim needs one set per matroid");
  }
  if (parts < 1) throw InputError("verify_claim needs m >= 1");
  const int n = matroids[0].size();
  std::vector<int> owner(n, -1);
  ClaimReport report;
  report.parts = parts;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (matroids[i].size() != n) throw InputError("matroids must share the ground set");
    const FaceSet a = make_face_set(sets[i], n);
    if (a.size() != sets[i].size()) throw InputError("set A_" + std::to_string(i + 1) + " has duplicates");
    for (Element e : a) {
      if (owner[e] >= 0) {
        throw HypothesisViolation("sets A_" + std::to_string(owner[e] + 1) + " and A_" +
                                      std::to_string(i + 1) + " intersect",
                                  static_cast<int>(i), FaceSet{e});
      }
      owner[e] = static_cast<int>(i);
    }
    auto packed = pack_into_independent(matroids[i], a, parts);
    if (auto* cert = std::get_if<CoveringCertificate>(&packed)) {
      throw HypothesisViolation("A_" + std::to_string(i + 1) + " is not a union of " +
                                    std::to_string(parts) + " independent sets",
                                static_cast<int>(i), cert->witness);
    }
    report.total_size += a.size();
  }
  report.bound = static_cast<int>(ceil_div(static_cast<std::int64_t>(report.total_size), parts + 1)) - 2;
  const SimplicialComplex y = matroid_deleted_join(matroids, report.bound + 1, limits);
  report.connectivity = homologically_connected(y, report.bound, opts);
  return report;
}

CorollaryReport verify_corollary(const Matroid& m, int k, const Limits& limits,
                                 const HomologyOptions& opts) {
  if (k < 1) throw InputError("verify_corollary needs k >= 1");
  CorollaryReport report;
  const MaxPacking packing = max_disjoint_bases(m);
  report.bases = packing.count;
  report.rank = m.rank();
  report.copies = k;
  const std::int64_t b = report.bases;
  const std::int64_t denom = ceil_div(b, k) + 1;
  report.real_bound = Rational(b * report.rank, denom) - 2;
  report.real_bound.canonicalize();
  report.bound = static_cast<int>((b * report.rank) / denom) - 2;
  report.claim_bound = static_cast<int>(ceil_div(b * report.rank, denom)) - 2;
  report.groups = partition_almost_equal(report.bases, k);
  std::vector<Matroid> factors(k, m);
  const SimplicialComplex y = matroid_deleted_join(factors, report.bound + 1, limits);
  report.connectivity = homologically_connected(y, report.bound, opts);
  return report;
}

ConjectureRecord conjecture_scan(const Matroid& m, int k, const Limits& limits,
                                 const HomologyOptions& opts) {
  if (k < 1) throw InputError("conjecture_scan needs k >= 1");
  ConjectureRecord record;
  record.bases = max_disjoint_bases(m).count;
  record.copies = k;
  record.target = k * m.rank() - 2;
  std::vector<Matroid> factors(k, m);
  const SimplicialComplex y = matroid_deleted_join(factors, record.target + 1, limits);
  record.connectivity = homologically_connected(y, record.target, opts);
  record.verdict = record.connectivity.verified;
  return record;
}

std::vector<ConjectureRecord> conjecture_scan(std::span<const Matroid> family, int k,
                                              const Limits& limits, const HomologyOptions& opts) {
  std::vector<ConjectureRecord> out;
  for (const Matroid& m : family) out.push_back(conjecture_scan(m, k, limits, opts));
  return out;
}

ConnectivityReport verify_matroid_connectivity(const Matroid& m, const Limits& limits,
                                               const HomologyOptions& opts) {
  const int c = m.rank() - 2;
  return homologically_connected(as_complex(m, c + 1, limits), c, opts);
}

}  // namespace mtv
