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

#include "mtv/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mtv/base_packing.hpp"
#include "mtv/complex.hpp"
#include "mtv/errors.hpp"
#include "mtv/homology.hpp"
#include "mtv/tverberg.hpp"

namespace mtv::cli {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kVerified: return "verified";
    case Outcome::kWitnessFound: return "witness-found";
    case Outcome::kFalsificationCandidate: return "falsification-candidate";
    case Outcome::kHypothesisViolated: return "hypothesis-violated";
    case Outcome::kResourceLimit: return "resource-limit";
    case Outcome::kInputError: return "input-error";
  }
  return "input-error";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kVerified:
    case Outcome::kWitnessFound: return 0;
    case Outcome::kFalsificationCandidate:
    case Outcome::kHypothesisViolated: return 1;
    case Outcome::kInputError: return 2;
    case Outcome::kResourceLimit: return 3;
  }
  return 2;
}

Json to_json(const RunReport& report) {
  Json j;
  j["format-version"] = 1;
  j["command"] = report.command;
  j["inputs-digest"] = report.inputs_digest;
  j["parameters"] = report.parameters;
  j["outcome"] = outcome_name(report.outcome);
  j["payload"] = report.payload;
  if (report.wall_time_s >= 0) j["wall-time-s"] = report.wall_time_s;
  return j;
}

std::string to_text(const RunReport& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto value = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const Json j = to_json(report);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object() && !it.value().empty()) {
      for (auto sub = it.value().begin(); sub != it.value().end(); ++sub) {
        rows.emplace_back(it.key() + "." + sub.key(), value(sub.value()));
      }
    } else {
      rows.emplace_back(it.key(), value(it.value()));
    }
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return out.str();
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return "sha256:" + out.str();
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw InputError("");
    std::size_t a = 0;
    std::size_t b = 0;
    const int first = std::stoi(text.substr(0, comma), &a);
    const int second = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw InputError("");
    return {first, second};
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " expects two integers 'a,b', got '" + text + "'");
  }
}

Json fvector_json(const FVector& f) {
  Json j = Json::array();
  for (std::uint64_t c : f.counts) j.push_back(c);
  return j;
}

Json connectivity_json(const ConnectivityReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["verified"] = r.verified;
  j["nonempty"] = r.nonempty;
  j["betti"] = r.betti;
  j["first-nonvanishing"] = r.first_nonvanishing ? Json(*r.first_nonvanishing) : Json(nullptr);
  j["f-vector"] = fvector_json(r.face_counts);
  j["boundary-columns"] = r.boundary_columns;
  j["exact-ranks"] = r.exact_ranks;
  return j;
}

Json witness_json(const TverbergWitness& w) {
  Json j;
  j["faces"] = Json::array();
  for (const auto& f : w.faces) j["faces"].push_back(face_to_json(f));
  j["point"] = rational_vector_to_json(w.point);
  j["coefficients"] = Json::array();
  for (const auto& c : w.coefficients) j["coefficients"].push_back(rational_vector_to_json(c));
  return j;
}

Json points_json(const PointConfig& cfg) {
  Json j;
  j["d"] = cfg.dim;
  j["points"] = Json::object();
  for (std::size_t e = 0; e < cfg.coords.size(); ++e) {
    if (cfg.coords[e]) j["points"][std::to_string(e)] = rational_vector_to_json(*cfg.coords[e]);
  }
  return j;
}

struct Args {
  // Common.
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;
  std::uint64_t max_faces = Limits::kDefaultMaxFaces;
  std::uint64_t max_tuples = Limits::kDefaultMaxTuples;
  double time_limit_s = 0;
  bool timing = false;
  // Matroid sources.
  std::vector<std::string> matroid_files;
  std::string uniform;
  std::string colourful;
  // Command specific.
  std::string set;
  std::string sets;
  std::string chessboard;
  std::string faces_file;
  std::string points_file;
  std::string out_file;
  std::string rank1_range;
  int k = 0;
  int m = 0;
  int t = 0;
  int max_t = 0;
  int dim = 0;
  int max_dim = -2;
  int deleted_join = 0;
  int up_to = -2;
  int matrix = -1;
  long long b = 0;
  long long d = 0;
  long long p = 0;
};

class Runner {
 public:
  Runner(const Args& args, RunReport& report) : args_(args), report_(report) {
    limits_.max_faces = args.max_faces;
    limits_.max_tuples = args.max_tuples;
    limits_.threads = std::max(1, args.threads);
    if (args.time_limit_s > 0) {
      limits_.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(args.time_limit_s));
    }
    opts_.threads = limits_.threads;
  }

  void dispatch(const std::string& command);
  std::string digest() const { return inputs_.empty() ? "none" : sha256_hex(inputs_); }

 private:
  std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    inputs_ += ss.str();
    return ss.str();
  }

  Json& params() { return report_.parameters; }
  Json& payload() { return report_.payload; }

  std::vector<MatroidFile> load_matroids() {
    std::vector<MatroidFile> out;
    int sources = 0;
    if (!args_.matroid_files.empty()) {
      ++sources;
      Json files = Json::array();
      for (const auto& path : args_.matroid_files) files.push_back(path);
      params()["matroid"] = files.size() == 1 ? files[0] : files;
      for (const auto& path : args_.matroid_files) {
        std::istringstream in(read_file(path));
        out.push_back(read_matroid(in));
      }
    }
    if (!args_.uniform.empty()) {
      ++sources;
      auto [r, n] = parse_pair(args_.uniform, "--uniform");
      out.push_back({Matroid::uniform(r, n), {}});
      params()["uniform"] = args_.uniform;
    }
    if (!args_.colourful.empty()) {
      ++sources;
      auto [r, d] = parse_pair(args_.colourful, "--colourful");
      out.push_back({colourful_complex(r, d), {}});
      params()["colourful"] = args_.colourful;
    }
    if (sources != 1) {
      throw InputError("give exactly one of --matroid, --uniform, --colourful");
    }
    return out;
  }

  Matroid load_matroid() {
    auto all = load_matroids();
    if (all.size() != 1) throw InputError("this command takes a single matroid");
    return all.front().matroid;
  }

  PointConfig load_points(const Matroid& m) {
    if (!args_.points_file.empty()) {
      params()["points"] = args_.points_file;
      std::istringstream in(read_file(args_.points_file));
      return read_points(in, m.size());
    }
    const int dim = args_.dim > 0 ? args_.dim : std::max(1, m.rank() - 1);
    params()["points"] = "random";
    params()["seed"] = args_.seed;
    params()["dim"] = dim;
    return random_config(m.non_loops(), m.size(), dim, args_.seed);
  }

  void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
  }

  void cmd_rank();
  void cmd_bases();
  void cmd_pack();
  void cmd_complex();
  void cmd_chessboard();
  void cmd_homology();
  void cmd_verify_claim();
  void cmd_verify_corollary();
  void cmd_verify_matroid_conn();
  void cmd_conjecture_scan();
  void cmd_hulls();
  void cmd_tverberg();
  void cmd_verify_theorem();
  void cmd_prime();
  void cmd_inequality();

  void connectivity_outcome(const ConnectivityReport& r) {
    report_.outcome = r.verified ? Outcome::kVerified : Outcome::kFalsificationCandidate;
  }

  void write_complex(const SimplicialComplex& x) {
    if (args_.out_file.empty()) return;
    std::ofstream out(args_.out_file);
    if (!out) throw InputError("cannot write '" + args_.out_file + "'");
    write_faces(out, x);
    params()["out"] = args_.out_file;
  }

  const Args& args_;
  RunReport& report_;
  Limits limits_;
  HomologyOptions opts_;
  std::string inputs_;
};

void Runner::cmd_rank() {
  const Matroid m = load_matroid();
  FaceSet s;
  if (args_.set.empty()) {
    for (int e = 0; e < m.size(); ++e) s.push_back(e);
  } else {
    s = parse_id_list(args_.set, m.size());
    params()["set"] = args_.set;
  }
  payload()["size"] = m.size();
  payload()["set"] = face_to_json(s);
  payload()["rank"] = m.rank(s);
  payload()["independent"] = m.is_independent(s);
  payload()["loops"] = Json::array();
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_loop(e)) payload()["loops"].push_back(e);
  }
}

void Runner::cmd_bases() {
  const Matroid m = load_matroid();
  const MaxPacking r = max_disjoint_bases(m);
  payload()["rank"] = m.rank();
  payload()["b"] = r.count;
  payload()["degenerate"] = r.degenerate;
  payload()["packing"] = Json::array();
  for (const auto& base : r.packing.bases) payload()["packing"].push_back(face_to_json(base));
  if (r.next_impossible) {
    const auto& cert = *r.next_impossible;
    Json c;
    c["target"] = cert.target;
    c["witness"] = face_to_json(cert.witness);
    c["lhs"] = static_cast<long>(cert.target) * m.rank(cert.witness) +
               (m.size() - static_cast<long>(cert.witness.size()));
    c["rhs"] = static_cast<long>(cert.target) * m.rank();
    c["valid"] = certificate_holds(m, cert);
    payload()["certificate"] = c;
  } else {
    payload()["certificate"] = nullptr;
  }
}

void Runner::cmd_pack() {
  const Matroid m = load_matroid();
  if (args_.k > 0) {
    require(args_.set.empty() && args_.m == 0, "--k excludes --set/--m");
    params()["k"] = args_.k;
    auto r = pack_k_bases(m, args_.k);
    if (auto* packing = std::get_if<BasePacking>(&r)) {
      payload()["found"] = true;
      payload()["bases"] = Json::array();
      for (const auto& b : packing->bases) payload()["bases"].push_back(face_to_json(b));
    } else {
      const auto& cert = std::get<PackingCertificate>(r);
      payload()["found"] = false;
      payload()["certificate"] = {{"target", cert.target},
                                  {"witness", face_to_json(cert.witness)},
                                  {"valid", certificate_holds(m, cert)}};
    }
    return;
  }
  require(args_.m > 0, "pack needs --k or --set with --m");
  params()["set"] = args_.set;
  params()["m"] = args_.m;
  auto r = pack_into_independent(m, parse_id_list(args_.set, m.size()), args_.m);
  if (auto* parts = std::get_if<std::vector<FaceSet>>(&r)) {
    payload()["found"] = true;
    payload()["parts"] = Json::array();
    for (const auto& p : *parts) payload()["parts"].push_back(face_to_json(p));
  } else {
    const auto& cert = std::get<CoveringCertificate>(r);
    payload()["found"] = false;
    payload()["certificate"] = {{"parts", cert.parts},
                                {"witness", face_to_json(cert.witness)},
                                {"valid", certificate_holds(m, cert)}};
  }
}

void Runner::cmd_complex() {
  const Matroid m = load_matroid();
  SimplicialComplex x;
  if (args_.deleted_join > 0) {
    params()["deleted-join"] = args_.deleted_join;
    const int top = args_.max_dim >= -1 ? args_.max_dim : args_.deleted_join * m.rank() - 1;
    params()["max-dim"] = top;
    std::vector<Matroid> factors(args_.deleted_join, m);
    x = matroid_deleted_join(factors, top, limits_);
    payload()["action-free"] = is_action_free(x);
  } else {
    const int top = args_.max_dim >= -1 ? args_.max_dim : m.rank() - 1;
    params()["max-dim"] = top;
    x = as_complex(m, top, limits_);
  }
  payload()["f-vector"] = fvector_json(x.f_vector());
  payload()["max-dim"] = x.max_dim();
  payload()["complete"] = x.complete();
  write_complex(x);
}

void Runner::cmd_chessboard() {
  require(args_.k >= 1 && args_.m >= 1, "chessboard needs --k and --m >= 1");
  params()["k"] = args_.k;
  params()["m"] = args_.m;
  if (args_.max_dim >= -1) params()["max-dim"] = args_.max_dim;
  const SimplicialComplex x = chessboard(args_.k, args_.m, args_.max_dim, limits_);
  payload()["f-vector"] = fvector_json(x.f_vector());
  payload()["max-dim"] = x.max_dim();
  payload()["complete"] = x.complete();
  payload()["action-free"] = is_action_free(x);
  write_complex(x);
}

void Runner::cmd_homology() {
  require(args_.up_to >= -1, "homology needs --up-to D (D >= -1)");
  params()["up-to"] = args_.up_to;
  const int need = args_.up_to + 1;
  SimplicialComplex x;
  if (!args_.chessboard.empty()) {
    auto [k, m] = parse_pair(args_.chessboard, "--chessboard");
    params()["chessboard"] = args_.chessboard;
    x = chessboard(k, m, need, limits_);
  } else if (!args_.faces_file.empty()) {
    params()["faces"] = args_.faces_file;
    std::istringstream in(read_file(args_.faces_file));
    x = read_faces(in, limits_);
  } else {
    const Matroid m = load_matroid();
    if (args_.deleted_join > 0) {
      params()["deleted-join"] = args_.deleted_join;
      std::vector<Matroid> factors(args_.deleted_join, m);
      x = matroid_deleted_join(factors, need, limits_);
    } else {
      x = as_complex(m, need, limits_);
    }
  }
  const BettiVector b = betti_reduced(x, args_.up_to, opts_);
  payload()["betti"] = b.values;
  payload()["f-vector"] = fvector_json(x.f_vector());
  payload()["complete"] = x.complete();
  payload()["exact-ranks"] = b.exact_ranks;
  if (x.complete() && x.max_dim() <= args_.up_to) {
    // Euler-Poincaré: Σ(-1)^i f_i - 1 = Σ(-1)^i β̃_i.
    long long chi = -1;
    long long betti_sum = 0;
    for (int i = 0; i <= x.max_dim(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(x.faces(i).size());
    for (int i = 0; i <= args_.up_to; ++i) betti_sum += (i % 2 ? -1 : 1) * static_cast<long long>(b.values[i]);
    payload()["reduced-euler"] = chi;
    payload()["euler-consistent"] = chi == betti_sum;
  }
  if (args_.matrix >= 0) {
    require(!args_.out_file.empty(), "--matrix needs --out");
    params()["matrix"] = args_.matrix;
    params()["out"] = args_.out_file;
    std::ofstream out(args_.out_file);
    if (!out) throw InputError("cannot write '" + args_.out_file + "'");
    boundary_matrix(x, args_.matrix, limits_.threads).write_triplets(out);
  }
}

void Runner::cmd_verify_claim() {
  auto files = load_matroids();
  require(!args_.sets.empty(), "verify-claim needs --sets");
  require(args_.m >= 1, "verify-claim needs --m >= 1");
  const int n = files.front().matroid.size();
  const std::vector<FaceSet> sets = parse_id_groups(args_.sets, n);
  std::vector<Matroid> matroids;
  for (const auto& f : files) matroids.push_back(f.matroid);
  if (matroids.size() == 1) matroids.assign(sets.size(), matroids.front());
  require(matroids.size() == sets.size(), "verify-claim needs one matroid or one per set");
  params()["sets"] = args_.sets;
  params()["m"] = args_.m;
  try {
    const ClaimReport r = verify_claim(matroids, sets, args_.m, limits_, opts_);
    payload()["k"] = sets.size();
    payload()["total-size"] = r.total_size;
    payload()["bound"] = r.bound;
    payload()["connectivity"] = connectivity_json(r.connectivity);
    connectivity_outcome(r.connectivity);
    if (!r.connectivity.verified) {
      payload()["inputs"] = Json::array();
      for (const auto& m : matroids) payload()["inputs"].push_back(matroid_to_json(m.spec()));
    }
  } catch (const HypothesisViolation& v) {
    report_.outcome = Outcome::kHypothesisViolated;
    payload()["reason"] = v.what();
    payload()["index"] = v.index() + 1;
    payload()["witness"] = face_to_json(v.witness());
  }
}

void Runner::cmd_verify_corollary() {
  const Matroid m = load_matroid();
  require(args_.k >= 1, "verify-corollary needs --k >= 1");
  params()["k"] = args_.k;
  const CorollaryReport r = verify_corollary(m, args_.k, limits_, opts_);
  payload()["b"] = r.bases;
  payload()["rank"] = r.rank;
  payload()["real-bound"] = to_string(r.real_bound);
  payload()["bound"] = r.bound;
  payload()["claim-bound"] = r.claim_bound;
  payload()["groups"] = r.groups;
  payload()["connectivity"] = connectivity_json(r.connectivity);
  connectivity_outcome(r.connectivity);
  if (!r.connectivity.verified) payload()["inputs"] = matroid_to_json(m.spec());
}

void Runner::cmd_verify_matroid_conn() {
  const Matroid m = load_matroid();
  const ConnectivityReport r = verify_matroid_connectivity(m, limits_, opts_);
  payload()["rank"] = m.rank();
  payload()["connectivity"] = connectivity_json(r);
  connectivity_outcome(r);
  if (!r.verified) payload()["inputs"] = matroid_to_json(m.spec());
}

void Runner::cmd_conjecture_scan() {
  require(args_.k >= 1, "conjecture-scan needs --k >= 1");
  params()["k"] = args_.k;
  std::vector<Matroid> family;
  if (!args_.rank1_range.empty()) {
    auto [lo, hi] = parse_pair(args_.rank1_range, "--rank1-range");
    require(1 <= lo && lo <= hi, "--rank1-range needs 1 <= a <= b");
    params()["rank1-range"] = args_.rank1_range;
    for (int n = lo; n <= hi; ++n) family.push_back(Matroid::uniform(1, n));
  } else {
    family.push_back(load_matroid());
  }
  payload()["records"] = Json::array();
  for (const ConjectureRecord& r : conjecture_scan(family, args_.k, limits_, opts_)) {
    Json j;
    j["b"] = r.bases;
    j["target"] = r.target;
    j["verdict"] = r.verdict;
    j["connectivity"] = connectivity_json(r.connectivity);
    payload()["records"].push_back(j);
  }
}

void Runner::cmd_hulls() {
  require(!args_.points_file.empty() && !args_.sets.empty(), "hulls needs --points and --sets");
  params()["points"] = args_.points_file;
  params()["sets"] = args_.sets;
  std::istringstream in(read_file(args_.points_file));
  const PointConfig cfg = read_points(in, -1);
  std::vector<std::vector<Point>> sets;
  for (const FaceSet& g : parse_id_groups(args_.sets, static_cast<int>(cfg.coords.size()))) {
    require(!g.empty(), "hulls needs nonempty sets");
    std::vector<Point> pts;
    for (Element e : g) pts.push_back(cfg.at(e));
    sets.push_back(std::move(pts));
  }
  const auto r = hulls_intersect(sets);
  payload()["intersect"] = r.has_value();
  if (r) {
    report_.outcome = Outcome::kWitnessFound;
    payload()["point"] = rational_vector_to_json(r->point);
    payload()["coefficients"] = Json::array();
    for (const auto& c : r->coefficients) payload()["coefficients"].push_back(rational_vector_to_json(c));
  }
}

void Runner::cmd_tverberg() {
  const Matroid m = load_matroid();
  const PointConfig cfg = load_points(m);
  if (args_.max_t > 0) {
    params()["max-t"] = args_.max_t;
    const MaxTResult r = max_affine_t(m, cfg, args_.max_t, limits_);
    payload()["t"] = r.t;
    payload()["monotone"] = r.monotone;
    payload()["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    if (r.witness) {
      payload()["validated"] = validate_witness(m, cfg, *r.witness);
      report_.outcome = Outcome::kWitnessFound;
    }
    return;
  }
  require(args_.t >= 1, "tverberg needs --t or --max-t");
  params()["t"] = args_.t;
  const SearchResult r = find_tverberg(m, cfg, args_.t, limits_);
  payload()["rank-matches-dimension"] = r.rank_matches_dimension;
  payload()["candidate-faces"] = r.candidate_faces;
  payload()["tuples-examined"] = r.tuples_examined;
  payload()["exhaustive"] = !r.witness.has_value();
  payload()["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  if (r.witness) {
    payload()["validated"] = validate_witness(m, cfg, *r.witness);
    report_.outcome = Outcome::kWitnessFound;
  }
}

void Runner::cmd_verify_theorem() {
  const Matroid m = load_matroid();
  const PointConfig cfg = load_points(m);
  const TheoremReport r = verify_theorem(m, cfg, limits_);
  payload()["note"] = "affine maps only; a witness for an affine map is a weaker instance of the continuous bound";
  payload()["b"] = r.bases;
  payload()["d"] = r.dim;
  payload()["target"] = r.target;
  payload()["prime"] = r.prime ? Json(*r.prime) : Json(nullptr);
  if (r.inequality) {
    payload()["inequality"] = {{"lhs", to_string(r.inequality->lhs)},
                               {"rhs", r.inequality->rhs},
                               {"holds", r.inequality->holds}};
  } else {
    payload()["inequality"] = nullptr;
  }
  payload()["tuples-examined"] = r.search.tuples_examined;
  payload()["witness"] = r.search.witness ? witness_json(*r.search.witness) : Json(nullptr);
  if (r.search.witness) payload()["validated"] = validate_witness(m, cfg, *r.search.witness);
  if (r.falsification_candidate) {
    report_.outcome = Outcome::kFalsificationCandidate;
    payload()["candidate-faces"] = r.search.candidate_faces;
    payload()["inputs"] = {{"matroid", matroid_to_json(m.spec())}, {"points", points_json(cfg)}};
  } else {
    report_.outcome = r.search.witness ? Outcome::kWitnessFound : Outcome::kVerified;
  }
  if (r.inequality && !r.inequality->holds) report_.outcome = Outcome::kFalsificationCandidate;
}

void Runner::cmd_prime() {
  require(args_.b >= 1, "prime needs --b >= 1");
  params()["b"] = args_.b;
  const auto p = choose_prime(args_.b);
  payload()["prime"] = p ? Json(*p) : Json(nullptr);
  payload()["target"] = theorem_target(args_.b);
}

void Runner::cmd_inequality() {
  require(args_.b >= 1 && args_.d >= 1 && args_.p >= 1, "inequality needs --b, --d, --p >= 1");
  params()["b"] = args_.b;
  params()["d"] = args_.d;
  params()["p"] = args_.p;
  const DoldInequality r = evaluate_dold_inequality(args_.b, args_.d, args_.p);
  // p lies in the theorem's interval iff 16p² >= b and 4p² <= b.
  const bool in_range = is_prime(args_.p) && 16 * args_.p * args_.p >= args_.b &&
                        4 * args_.p * args_.p <= args_.b;
  payload()["lhs"] = to_string(r.lhs);
  payload()["rhs"] = r.rhs;
  payload()["holds"] = r.holds;
  payload()["p-in-range"] = in_range;
  if (!r.holds) {
    report_.outcome = in_range ? Outcome::kFalsificationCandidate : Outcome::kHypothesisViolated;
  }
}

void Runner::dispatch(const std::string& command) {
  if (command == "rank") return cmd_rank();
  if (command == "bases") return cmd_bases();
  if (command == "pack") return cmd_pack();
  if (command == "complex") return cmd_complex();
  if (command == "chessboard") return cmd_chessboard();
  if (command == "homology") return cmd_homology();
  if (command == "verify-claim") return cmd_verify_claim();
  if (command == "verify-corollary") return cmd_verify_corollary();
  if (command == "verify-matroid-conn") return cmd_verify_matroid_conn();
  if (command == "conjecture-scan") return cmd_conjecture_scan();
  if (command == "hulls") return cmd_hulls();
  if (command == "tverberg") return cmd_tverberg();
  if (command == "verify-theorem") return cmd_verify_theorem();
  if (command == "prime") return cmd_prime();
  if (command == "inequality") return cmd_inequality();
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Matroid base packing, deleted-join homology and Tverberg witness search", "mtv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", a.seed, "Seed for random point configurations");
  app.add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-faces", a.max_faces, "Face cap per dimension (default 5000000)");
  app.add_option("--max-tuples", a.max_tuples, "Tuple cap for witness search (default 50000000)");
  app.add_option("--time-limit-s", a.time_limit_s, "Wall-time cap in seconds (0 = none)");
  app.add_flag("--timing", a.timing, "Include wall time in the report");

  auto matroid_opts = [&](CLI::App* sub) {
    sub->add_option("--matroid", a.matroid_files, "Matroid file (.matroid)");
    sub->add_option("--uniform", a.uniform, "Uniform matroid 'r,n'");
    sub->add_option("--colourful", a.colourful, "Colourful complex 'r,d'");
  };
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.emplace_back(name, sub);
    return sub;
  };
  {
    auto* s = add("rank", "Rank and independence of a set");
    matroid_opts(s);
    s->add_option("--set", a.set, "Comma-separated ids (default: ground set)");
  }
  matroid_opts(add("bases", "Maximum number of disjoint bases with certificate"));
  {
    auto* s = add("pack", "Pack k disjoint bases, or split a set into m independent sets");
    matroid_opts(s);
    s->add_option("--k", a.k, "Number of disjoint bases");
    s->add_option("--set", a.set, "Set to split");
    s->add_option("--m", a.m, "Number of independent parts");
  }
  {
    auto* s = add("complex", "Matroid complex or its deleted join power");
    matroid_opts(s);
    s->add_option("--max-dim", a.max_dim, "Materialization bound");
    s->add_option("--deleted-join", a.deleted_join, "Deleted join power k");
    s->add_option("--out", a.out_file, "Write faces to this file");
  }
  {
    auto* s = add("chessboard", "Chessboard complex C(k,m)");
    s->add_option("--k", a.k, "Rows")->required();
    s->add_option("--m", a.m, "Columns")->required();
    s->add_option("--max-dim", a.max_dim, "Materialization bound");
    s->add_option("--out", a.out_file, "Write faces to this file");
  }
  {
    auto* s = add("homology", "Reduced rational Betti numbers");
    matroid_opts(s);
    s->add_option("--chessboard", a.chessboard, "Chessboard complex 'k,m'");
    s->add_option("--faces", a.faces_file, "Faces file (.faces)");
    s->add_option("--deleted-join", a.deleted_join, "Deleted join power of the matroid");
    s->add_option("--up-to", a.up_to, "Highest degree")->required();
    s->add_option("--matrix", a.matrix, "Export boundary matrix of this index");
    s->add_option("--out", a.out_file, "Triplet output file for --matrix");
  }
  {
    auto* s = add("verify-claim", "Deleted-join connectivity from set packings");
    matroid_opts(s);
    s->add_option("--sets", a.sets, "Disjoint sets 'ids;ids;...'")->required();
    s->add_option("--m", a.m, "Independent sets per part")->required();
  }
  {
    auto* s = add("verify-corollary", "Deleted-join connectivity from b(M)");
    matroid_opts(s);
    s->add_option("--k", a.k, "Deleted join power")->required();
  }
  matroid_opts(add("verify-matroid-conn", "Matroid complex is (rank-2)-connected"));
  {
    auto* s = add("conjecture-scan", "Test (k*rank-2)-connectivity of deleted join powers");
    matroid_opts(s);
    s->add_option("--k", a.k, "Deleted join power")->required();
    s->add_option("--rank1-range", a.rank1_range, "Scan U(1,n) for n in 'a,b'");
  }
  {
    auto* s = add("hulls", "Exact convex hull intersection");
    s->add_option("--points", a.points_file, "Points file (.pts)")->required();
    s->add_option("--sets", a.sets, "Point id groups 'ids;ids;...'")->required();
  }
  {
    auto* s = add("tverberg", "Search for a Tverberg witness");
    matroid_opts(s);
    s->add_option("--points", a.points_file, "Points file (.pts); random when absent");
    s->add_option("--dim", a.dim, "Dimension of random points (default rank-1)");
    s->add_option("--t", a.t, "Number of faces");
    s->add_option("--max-t", a.max_t, "Find the largest t up to this cap");
  }
  {
    auto* s = add("verify-theorem", "Check the sqrt(b)/4 Tverberg bound on an affine map");
    matroid_opts(s);
    s->add_option("--points", a.points_file, "Points file (.pts); random when absent");
  }
  {
    auto* s = add("prime", "Largest prime in [sqrt(b)/4, sqrt(b)/2]");
    s->add_option("--b", a.b, "Number of disjoint bases")->required();
  }
  {
    auto* s = add("inequality", "Closing inequality of the bound");
    s->add_option("--b", a.b)->required();
    s->add_option("--d", a.d)->required();
    s->add_option("--p", a.p)->required();
  }

  RunReport report;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report.command = args.empty() ? "" : args.front();
    report.inputs_digest = "none";
    report.outcome = Outcome::kInputError;
    report.payload["error"] = e.what();
    err << "error: " << e.what() << "\n";
    out << (a.format == "text" ? to_text(report) : to_json(report).dump(2) + "\n");
    return exit_code(report.outcome);
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) report.command = name;
  }
  const auto start = std::chrono::steady_clock::now();
  Runner runner(a, report);
  try {
    runner.dispatch(report.command);
  } catch (const InputError& e) {
    report.outcome = Outcome::kInputError;
    report.payload = {{"error", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    report.outcome = Outcome::kInputError;
    report.payload = {{"error", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const ResourceLimitError& e) {
    report.outcome = Outcome::kResourceLimit;
    report.payload = {{"error", e.what()}, {"progress", e.progress()}};
    err << "resource limit: " << e.what() << "\n";
  }
  report.inputs_digest = runner.digest();
  if (a.timing) {
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  out << (a.format == "text" ? to_text(report) : to_json(report).dump(2) + "\n");
  return exit_code(report.outcome);
}

}  // namespace mtv::cli
