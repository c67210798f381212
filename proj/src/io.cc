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

#include "mtv/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mtv/errors.hpp"

namespace mtv {
namespace {

Rational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw InputError("rational entries must be strings or integers");
}

std::vector<FaceSet> json_id_lists(const Json& v, int size) {
  std::vector<FaceSet> out;
  for (const auto& list : v) out.push_back(make_face_set(list.get<std::vector<int>>(), size));
  return out;
}

int json_int(const Json& record, const char* key) {
  if (!record.contains(key) || !record[key].is_number_integer()) {
    throw InputError(std::string("matroid record needs integer field '") + key + "'");
  }
  return record[key].get<int>();
}

}  // namespace

MatroidFile parse_matroid(const Json& record) {
  try {
    if (!record.is_object()) throw InputError("matroid record must be a JSON object");
    if (!record.contains("format-version") || record["format-version"] != 1) {
      throw InputError("matroid record needs \"format-version\": 1");
    }
    const std::string type = record.at("type").get<std::string>();
    MatroidSpec spec;
    if (type == "uniform") {
      spec = UniformSpec{json_int(record, "rank"), json_int(record, "size")};
    } else if (type == "graphic") {
      GraphicSpec g;
      g.vertex_count = json_int(record, "vertices");
      for (const auto& e : record.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("graphic edges are [u, v] pairs");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      spec = std::move(g);
    } else if (type == "linear") {
      LinearSpec l;
      const std::string field = record.at("field").get<std::string>();
      if (field == "rational") {
        l.field = Field::kRational;
      } else if (field == "prime") {
        l.field = Field::kPrime;
        l.prime = record.at("prime").get<std::uint64_t>();
      } else {
        throw InputError("linear field must be \"rational\" or \"prime\"");
      }
      l.size = json_int(record, "size");
      for (const auto& row : record.at("rows")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(json_rational(v));
        if (static_cast<int>(r.size()) != l.size) throw InputError("linear row length differs from size");
        l.rows.push_back(std::move(r));
      }
      spec = std::move(l);
    } else if (type == "partition") {
      PartitionSpec p;
      p.size = json_int(record, "size");
      p.blocks = json_id_lists(record.at("blocks"), p.size);
      p.capacities = record.at("capacities").get<std::vector<int>>();
      spec = std::move(p);
    } else if (type == "explicit") {
      ExplicitSpec e;
      e.size = json_int(record, "size");
      if (e.size < 0 || e.size > 64) throw InputError("explicit matroid size must be in [0, 64]");
      e.maximal = json_id_lists(record.at("maximal"), e.size);
      spec = std::move(e);
    } else {
      throw InputError("unknown matroid type '" + type + "'");
    }
    MatroidFile out{Matroid(std::move(spec)), {}};
    if (record.contains("names")) {
      out.names = record["names"].get<std::vector<std::string>>();
      if (static_cast<int>(out.names.size()) != out.matroid.size()) {
        throw InputError("names must list one entry per element");
      }
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed matroid record: ") + e.what());
  }
}

MatroidFile read_matroid(std::istream& in) {
  Json record;
  try {
    record = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("matroid file is not valid JSON: ") + e.what());
  }
  return parse_matroid(record);
}

Json matroid_to_json(const MatroidSpec& spec) {
  Json j;
  j["format-version"] = 1;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          j["type"] = "uniform";
          j["rank"] = s.rank;
          j["size"] = s.size;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          j["type"] = "graphic";
          j["vertices"] = s.vertex_count;
          j["edges"] = Json::array();
          for (auto [u, v] : s.edges) j["edges"].push_back({u, v});
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          j["type"] = "linear";
          j["field"] = s.field == Field::kRational ? "rational" : "prime";
          if (s.field == Field::kPrime) j["prime"] = s.prime;
          j["size"] = s.size;
          j["rows"] = Json::array();
          for (const auto& row : s.rows) j["rows"].push_back(rational_vector_to_json(row));
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          j["type"] = "partition";
          j["size"] = s.size;
          j["blocks"] = Json::array();
          for (const auto& b : s.blocks) j["blocks"].push_back(face_to_json(b));
          j["capacities"] = s.capacities;
        } else {
          j["type"] = "explicit";
          j["size"] = s.size;
          j["maximal"] = Json::array();
          for (const auto& f : s.maximal) j["maximal"].push_back(face_to_json(f));
        }
      },
      spec);
  return j;
}

PointConfig read_points(std::istream& in, int size) {
  PointConfig cfg;
  const bool grow = size < 0;
  if (!grow) cfg.coords.assign(size, std::nullopt);
  std::string line;
  bool have_dim = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };
    if (line.rfind("format-version=", 0) == 0) {
      if (have_dim || line != "format-version=1") throw InputError("bad format-version line" + where());
      continue;
    }
    if (line.rfind("d=", 0) == 0) {
      if (have_dim) throw InputError("duplicate dimension header" + where());
      try {
        cfg.dim = std::stoi(line.substr(2));
      } catch (const std::exception&) {
        throw InputError("bad dimension header" + where());
      }
      if (cfg.dim < 1) throw InputError("dimension must be >= 1" + where());
      have_dim = true;
      continue;
    }
    if (!have_dim) throw InputError("points file must start with d=<dim>" + where());
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("expected 'id: coordinates'" + where());
    int id = -1;
    try {
      std::size_t used = 0;
      id = std::stoi(line.substr(0, colon), &used);
      if (used != colon) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad element id" + where());
    }
    if (id < 0 || (!grow && id >= size)) throw InputError("element id out of range" + where());
    if (grow && id >= static_cast<int>(cfg.coords.size())) cfg.coords.resize(id + 1);
    if (cfg.coords[id]) throw InputError("duplicate element id" + where());
    std::istringstream rest(line.substr(colon + 1));
    Point p;
    std::string token;
    while (rest >> token) p.push_back(parse_rational(token));
    if (static_cast<int>(p.size()) != cfg.dim) throw InputError("wrong coordinate count" + where());
    cfg.coords[id] = std::move(p);
  }
  if (!have_dim) throw InputError("points file has no d=<dim> header");
  return cfg;
}

void write_points(std::ostream& out, const PointConfig& cfg) {
  out << "format-version=1\n";
  out << "d=" << cfg.dim << "\n";
  for (std::size_t e = 0; e < cfg.coords.size(); ++e) {
    if (!cfg.coords[e]) continue;
    out << e << ":";
    for (const Rational& q : *cfg.coords[e]) out << " " << to_string(q);
    out << "\n";
  }
}

FaceSet parse_id_list(const std::string& text, int size) {
  std::vector<Element> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad element id '" + item + "'");
    }
  }
  const std::size_t n = ids.size();
  FaceSet out = make_face_set(std::move(ids), size);
  if (out.size() != n) throw InputError("duplicate element id in '" + text + "'");
  return out;
}

std::vector<FaceSet> parse_id_groups(const std::string& text, int size) {
  std::vector<FaceSet> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) out.push_back(parse_id_list(group, size));
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

Json face_to_json(const FaceSet& f) {
  Json j = Json::array();
  for (Element e : f) j.push_back(e);
  return j;
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const Rational& q : v) j.push_back(to_string(q));
  return j;
}

}  // namespace mtv
