#include "ids/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ids {

Int json_int(const Json& v, const char* what) {
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(std::string("bad integer for ") + what + ": '" + v.get<std::string>() +
                       "'");
    }
  }
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Int(std::to_string(v.get<unsigned long long>()));
    return Int(std::to_string(v.get<long long>()));
  }
  throw ParseError(std::string("expected an integer for ") + what);
}

Rat json_rat(const Json& v, const char* what) {
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(std::string("bad rational for ") + what + ": '" + v.get<std::string>() +
                       "'");
    }
  }
  return Rat(json_int(v, what));
}

Json int_json(const Int& v) { return Json(to_string(v)); }
Json rat_json(const Rat& v) { return Json(v.str()); }

namespace {

Int choose_denominator(const PointSet& s) {
  Int lat = lattice_denominator(s);
  if (s.M && *s.M > 0) {
    Int twoM = 2 * *s.M;
    if (twoM % lat == 0) return twoM;
  }
  return lat;
}

}  // namespace

Json pointset_to_json(const PointSet& s) {
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  if (!s.source.empty()) j["source"] = s.source;
  j["m"] = std::to_string(s.m);
  Int den = choose_denominator(s);
  j["denom"] = int_json(den);
  Json pts = Json::array();
  for (const auto& p : s.points) {
    Rat px = p.x * Rat(den), py = p.t * Rat(den);
    pts.push_back(Json::array({int_json(px.num()), int_json(py.num())}));
  }
  j["points"] = std::move(pts);
  return j;
}

PointSet pointset_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("point set must be a JSON object");
  for (const char* key : {"m", "denom", "points"})
    if (!j.contains(key)) throw ParseError(std::string("point set is missing \"") + key + "\"");
  PointSet s;
  Int m = json_int(j["m"], "m");
  if (m < 1 || !m.fits_slong_p()) throw DomainError("m out of range: " + to_string(m));
  s.m = m.get_si();
  Int den = json_int(j["denom"], "denom");
  if (den <= 0 || den % 2 != 0)
    throw DomainError("denom must be a positive even integer, got " + to_string(den));
  s.M = den / 2;
  const Json& pts = j["points"];
  if (!pts.is_array()) throw ParseError("\"points\" must be an array");
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each point must be a pair [px, py]");
    s.points.push_back(
        NormalizedPoint{Rat(json_int(p[0], "px"), den), Rat(json_int(p[1], "py"), den)});
  }
  if (j.contains("name") && j["name"].is_string()) s.name = j["name"].get<std::string>();
  if (j.contains("source") && j["source"].is_string()) s.source = j["source"].get<std::string>();
  validate_pointset(s);
  return s;
}

Json distance_matrix_to_json(const DistanceMatrix& dm) {
  Json rows = Json::array();
  for (const auto& row : dm.d) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(int_json(v));
    rows.push_back(std::move(r));
  }
  Json j;
  j["n"] = dm.n();
  j["d"] = std::move(rows);
  return j;
}

DistanceMatrix distance_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j["d"].is_array())
    throw ParseError("distance matrix must be an object with an array \"d\"");
  DistanceMatrix dm;
  for (const auto& row : j["d"]) {
    if (!row.is_array()) throw ParseError("distance matrix rows must be arrays");
    std::vector<Int> r;
    for (const auto& v : row) r.push_back(json_int(v, "distance"));
    dm.d.push_back(std::move(r));
  }
  if (j.contains("n")) {
    Int n = json_int(j["n"], "n");
    if (n != Int(dm.n())) throw ParseError("\"n\" does not match the number of rows");
  }
  for (const auto& r : dm.d)
    if (r.size() != dm.n()) throw ParseError("distance matrix must be square");
  return dm;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ParseError("write failed for '" + path + "'");
}

PointSet read_pointset_file(const std::string& path) {
  return pointset_from_json(parse_json_text(read_text_file(path)));
}

void write_pointset_file(const std::string& path, const PointSet& s) {
  write_text_file(path, pointset_to_json(s).dump(2) + "\n");
}

}  // namespace ids
