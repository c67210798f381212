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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "mtv/cli.hpp"
#include "mtv/errors.hpp"
#include "mtv/io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mtv {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  fs::current_path(MTV_TEST_DATA_DIR);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

TEST_CASE("matroid files round trip", "[io]") {
  for (const auto& nm : testing::matroid_generator()) {
    INFO(nm.name);
    const Matroid m{nm.spec};
    if (m.size() > 6) continue;
    const Json j = matroid_to_json(nm.spec);
    std::istringstream in(j.dump());
    const MatroidFile back = read_matroid(in);
    REQUIRE(back.matroid.size() == m.size());
    for (testing::Mask s = 0; s < (testing::Mask{1} << m.size()); ++s) {
      const FaceSet set = testing::mask_to_set(s);
      REQUIRE(back.matroid.is_independent(set) == m.is_independent(set));
    }
  }
  LinearSpec q{Field::kRational, 0, {{Rational(1, 3), -2}, {0, Rational(7, 5)}}, 2};
  const Json j = matroid_to_json(q);
  CHECK(j["rows"][0][0] == "1/3");
  std::istringstream in(j.dump());
  CHECK(std::get<LinearSpec>(read_matroid(in).matroid.spec()).rows == q.rows);
}

TEST_CASE("matroid file errors", "[io]") {
  std::istringstream no_version(R"({"type": "uniform", "rank": 1, "size": 2})");
  CHECK_THROWS_AS(read_matroid(no_version), InputError);
  std::istringstream bad_type(R"({"format-version": 1, "type": "magic"})");
  CHECK_THROWS_AS(read_matroid(bad_type), InputError);
  std::istringstream bad_rank(R"({"format-version": 1, "type": "uniform", "rank": 3, "size": 2})");
  CHECK_THROWS_AS(read_matroid(bad_rank), InputError);
  std::istringstream bad_entry(
      R"({"format-version": 1, "type": "linear", "field": "rational", "size": 1, "rows": [["1/0"]]})");
  CHECK_THROWS_AS(read_matroid(bad_entry), InputError);
  std::istringstream names(
      R"({"format-version": 1, "type": "uniform", "rank": 1, "size": 2, "names": ["a", "b"]})");
  CHECK(read_matroid(names).names == std::vector<std::string>{"a", "b"});
}

TEST_CASE("point files", "[io]") {
  std::istringstream in("format-version=1\nd=2\n# note\n1: 1/2 -3\n0: 0 4/2\n");
  const PointConfig cfg = read_points(in, 3);
  CHECK(cfg.dim == 2);
  CHECK(cfg.at(0) == Point{0, 2});
  CHECK(cfg.at(1) == Point{Rational(1, 2), -3});
  CHECK_FALSE(cfg.coords[2].has_value());
  std::ostringstream out;
  write_points(out, cfg);
  std::istringstream again(out.str());
  CHECK(read_points(again, 3).coords == cfg.coords);

  std::istringstream short_row("d=2\n0: 1\n");
  CHECK_THROWS_AS(read_points(short_row, 1), InputError);
  std::istringstream no_dim("0: 1\n");
  CHECK_THROWS_AS(read_points(no_dim, 1), InputError);
  std::istringstream out_of_range("d=1\n5: 1\n");
  CHECK_THROWS_AS(read_points(out_of_range, 2), InputError);
}

TEST_CASE("id lists", "[io]") {
  CHECK(parse_id_list("2,0,5", 6) == FaceSet{0, 2, 5});
  CHECK(parse_id_list("", 6).empty());
  CHECK_THROWS_AS(parse_id_list("1,x", 6), InputError);
  CHECK_THROWS_AS(parse_id_list("6", 6), InputError);
  CHECK(parse_id_groups("0,1;2", 3) == std::vector<FaceSet>{{0, 1}, {2}});
}

TEST_CASE("rationals", "[io]") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
  int code;
};

const std::vector<Golden>& golden_suite() {
  static const std::vector<Golden> suite = {
      {"rank_gf2", {"rank", "--matroid", "gf2.matroid", "--set", "0,1,2"}, 0},
      {"rank_rational", {"rank", "--matroid", "rational.matroid"}, 0},
      {"bases_k4", {"bases", "--matroid", "k4.matroid"}, 0},
      {"bases_k4_text", {"bases", "--matroid", "k4.matroid", "--format", "text"}, 0},
      {"pack_triangle", {"pack", "--matroid", "triangle.matroid", "--k", "2"}, 0},
      {"pack_split", {"pack", "--matroid", "triangle.matroid", "--set", "0,1,2", "--m", "2"}, 0},
      {"complex_k4", {"complex", "--matroid", "k4.matroid"}, 0},
      {"chessboard_3_4", {"chessboard", "--k", "3", "--m", "4"}, 0},
      {"homology_c34", {"homology", "--chessboard", "3,4", "--up-to", "2"}, 0},
      {"homology_dj", {"homology", "--uniform", "1,3", "--deleted-join", "2", "--up-to", "1"}, 0},
      {"claim_u24", {"verify-claim", "--uniform", "2,4", "--sets", "0,1;2,3", "--m", "1"}, 0},
      {"claim_overlap", {"verify-claim", "--uniform", "2,4", "--sets", "0,1;1,2", "--m", "1"}, 1},
      {"corollary_y21", {"verify-corollary", "--matroid", "y21.matroid", "--k", "2"}, 0},
      {"matroid_conn_k4", {"verify-matroid-conn", "--matroid", "k4.matroid"}, 0},
      {"conjecture_rank1", {"conjecture-scan", "--rank1-range", "2,5", "--k", "3"}, 0},
      {"hulls_triangle", {"hulls", "--points", "triangle.pts", "--sets", "0,1,2;3"}, 0},
      {"hulls_disjoint", {"hulls", "--points", "segments.pts", "--sets", "0,2;1,3"}, 0},
      {"tverberg_segments", {"tverberg", "--uniform", "2,4", "--points", "segments.pts", "--t", "2"}, 0},
      {"tverberg_random", {"tverberg", "--uniform", "3,7", "--t", "3", "--seed", "5"}, 0},
      {"max_t_segments", {"tverberg", "--uniform", "2,4", "--points", "segments.pts", "--max-t", "3"}, 0},
      {"theorem_u2_128",
       {"verify-theorem", "--matroid", "u2_128.matroid", "--points", "line128.pts"}, 0},
      {"theorem_colourful", {"verify-theorem", "--colourful", "4,1", "--seed", "3"}, 0},
      {"prime_64", {"prime", "--b", "64"}, 0},
      {"inequality_ok", {"inequality", "--b", "64", "--d", "1", "--p", "3"}, 0},
      {"inequality_outside", {"inequality", "--b", "4", "--d", "1", "--p", "5"}, 1},
      {"error_not_matroid", {"bases", "--matroid", "not_a_matroid.matroid"}, 2},
      {"error_version", {"bases", "--matroid", "bad_version.matroid"}, 2},
      {"error_truncated", {"rank", "--matroid", "truncated.matroid"}, 2},
      {"error_missing_file", {"rank", "--matroid", "missing.matroid"}, 2},
      {"error_points", {"hulls", "--points", "bad.pts", "--sets", "0;0"}, 2},
      {"error_bad_id", {"rank", "--uniform", "2,4", "--set", "0,9"}, 2},
      {"error_unknown_flag", {"rank", "--uniform", "2,4", "--frobnicate"}, 2},
      {"error_no_command", {}, 2},
      {"error_theorem_rank", {"verify-theorem", "--uniform", "2,8", "--points", "triangle.pts"}, 2},
      {"limit_faces", {"chessboard", "--k", "6", "--m", "8", "--max-faces", "100"}, 3},
      {"limit_tuples", {"tverberg", "--uniform", "2,20", "--t", "8", "--max-tuples", "50"}, 3},
  };
  return suite;
}

TEST_CASE("golden reports are byte exact", "[cli]") {
  const bool update = std::getenv("MTV_UPDATE_GOLDEN") != nullptr;
  const fs::path dir = fs::path(MTV_TEST_DATA_DIR).parent_path() / "golden";
  for (const Golden& g : golden_suite()) {
    INFO(g.name);
    const Run r = run(g.args);
    CHECK(r.code == g.code);
    const fs::path file = dir / (std::string(g.name) + ".out");
    if (update) {
      std::ofstream(file) << r.out;
      continue;
    }
    std::ifstream in(file);
    REQUIRE(in.good());
    std::stringstream expect;
    expect << in.rdbuf();
    CHECK(r.out == expect.str());
  }
}

TEST_CASE("reports are identical across runs and thread counts", "[cli]") {
  for (const Golden& g : golden_suite()) {
    if (g.args.empty()) continue;
    INFO(g.name);
    const Run one = run(g.args);
    for (const char* threads : {"2", "8"}) {
      std::vector<std::string> args = g.args;
      args.push_back("--threads");
      args.push_back(threads);
      const Run many = run(args);
      CHECK(many.code == one.code);
      if (one.code == 2) continue;  // the parameters echo differs only by the flag
      CHECK(many.out == one.out);
    }
  }
}

TEST_CASE("exit codes follow outcomes", "[cli]") {
  CHECK(cli::exit_code(cli::Outcome::kVerified) == 0);
  CHECK(cli::exit_code(cli::Outcome::kWitnessFound) == 0);
  CHECK(cli::exit_code(cli::Outcome::kFalsificationCandidate) == 1);
  CHECK(cli::exit_code(cli::Outcome::kHypothesisViolated) == 1);
  CHECK(cli::exit_code(cli::Outcome::kInputError) == 2);
  CHECK(cli::exit_code(cli::Outcome::kResourceLimit) == 3);
  const Run timed = run({"prime", "--b", "64", "--timing"});
  CHECK(timed.out.find("wall-time-s") != std::string::npos);
  CHECK(run({"prime", "--b", "64"}).out.find("wall-time-s") == std::string::npos);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-theorem") != std::string::npos);
}

TEST_CASE("face and matrix exports", "[cli]") {
  const fs::path tmp = fs::temp_directory_path() / "mtv_cli_export";
  fs::create_directories(tmp);
  const std::string faces = (tmp / "c34.faces").string();
  CHECK(run({"chessboard", "--k", "3", "--m", "4", "--out", faces}).code == 0);
  const Run h = run({"homology", "--faces", faces, "--up-to", "2"});
  CHECK(h.code == 0);
  CHECK(Json::parse(h.out)["payload"]["betti"] == Json::parse("[0, 2, 1]"));
  const std::string triplets = (tmp / "d1.txt").string();
  CHECK(run({"homology", "--chessboard", "2,3", "--up-to", "1", "--matrix", "1", "--out",
             triplets}).code == 0);
  std::ifstream in(triplets);
  std::string first;
  std::getline(in, first);
  CHECK(first == "format-version 1");
  fs::remove_all(tmp);
}

}  // namespace
}  // namespace mtv
