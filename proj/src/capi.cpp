#include "ids/ids.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "ids/bounds.hpp"
#include "ids/classify.hpp"
#include "ids/construct.hpp"
#include "ids/search.hpp"
#include "ids/serialize.hpp"
#include "ids/svg.hpp"
#include "ids/varieties.hpp"

struct ids_pointset {
  ids::PointSet ps;
};

namespace {

using ids::Int;
using ids::Json;
using ids::Rat;

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
ids_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return IDS_OK;
  } catch (const ids::ParseError& e) {
    g_last_error = e.what();
    return IDS_E_PARSE;
  } catch (const Json::exception& e) {
    g_last_error = std::string("malformed JSON request: ") + e.what();
    return IDS_E_PARSE;
  } catch (const ids::DomainError& e) {
    g_last_error = e.what();
    return IDS_E_DOMAIN;
  } catch (const ids::PreconditionError& e) {
    g_last_error = e.what();
    return IDS_E_INVALID;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return IDS_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw ids::PreconditionError(std::string("null argument: ") + what);
}

Int arg_int(const char* s, const char* what) {
  need(s, what);
  return ids::parse_int(s);
}

void emit(char** out, const Json& j) {
  need(out, "output");
  *out = dup(j.dump(2));
}

ids_pointset* wrap(ids::PointSet s) { return new ids_pointset{std::move(s)}; }

Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(ids::int_json(x));
  return a;
}

Json matrix_json(const std::vector<std::vector<Int>>& d) {
  Json a = Json::array();
  for (const auto& row : d) a.push_back(ints_json(row));
  return a;
}

Json certificate_json(const ids::IdsCertificate& c) {
  Json j;
  j["accepted"] = c.accepted;
  if (c.accepted) {
    j["distances"] = matrix_json(c.distances);
  } else {
    j["pair"] = {c.bad_i, c.bad_j};
    j["dist2"] = ids::rat_json(c.bad_dist2);
  }
  return j;
}

std::vector<ids::NormalizedPoint> points_arg(const Json& j) {
  if (!j.is_array()) throw ids::ParseError("\"points\" must be an array of [x, t] pairs");
  std::vector<ids::NormalizedPoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ids::ParseError("each point must be a pair [x, t]");
    out.push_back({ids::json_rat(p[0], "x"), ids::json_rat(p[1], "t")});
  }
  return out;
}

Json hybrid_json(const ids::HybridPoint& p) {
  Json j;
  j["x"] = ids::rat_json(p.x);
  j["y"] = ids::rat_json(p.y);
  Json d = Json::array();
  for (std::size_t i = 0; i < p.radicands.size(); ++i)
    d.push_back({{"sign", p.signs[i]}, {"radicand", ids::rat_json(p.radicands[i])}});
  j["d"] = d;
  return j;
}

long m_arg(const Json& req) {
  Int m = ids::json_int(req.at("m"), "m");
  if (m < 1 || !m.fits_slong_p() || !ids::is_squarefree(m))
    throw ids::DomainError("m must be a positive squarefree integer");
  return m.get_si();
}

std::vector<ids::NormalizedPoint> config_points(const Json& req, long /*m*/) {
  if (req.contains("points")) return points_arg(req["points"]);
  std::size_t k = req.at("k").get<std::size_t>();
  std::uint64_t seed = req.value("seed", std::uint64_t{1});
  long range = req.value("range", 20L);
  return ids::random_points(seed, k, range);
}

ids::RPoly curve_arg(const Json& req) {
  return ids::parse_poly(req.at("curve").get<std::string>(), ids::curve_roster());
}

Json texts(const std::vector<ids::RPoly>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(ids::to_text(p));
  return a;
}

Json op_buchberger(const Json& req) {
  std::vector<ids::RPoly> gens;
  Json j;
  if (req.contains("polys")) {
    ids::Roster vars = req.at("vars").get<std::vector<std::string>>();
    for (const auto& t : req["polys"]) gens.push_back(ids::parse_poly(t.get<std::string>(), vars));
  } else {
    long m = m_arg(req);
    gens = ids::build_Xk(m, config_points(req, m)).gens;
  }
  auto r = ids::buchberger_check(gens);
  j["groebner"] = r.groebner;
  j["pairs_checked"] = r.pairs_checked;
  j["generators"] = texts(gens);
  if (r.witness) {
    j["witness"] = {{"i", r.witness->i},
                    {"j", r.witness->j},
                    {"s_poly", ids::to_text(r.witness->s)},
                    {"remainder", ids::to_text(r.witness->remainder)}};
  }
  return j;
}

ids::IdealBasis basis_arg(const Json& req) {
  long m = m_arg(req);
  auto pts = config_points(req, m);
  if (req.contains("curve")) return ids::build_Ck(curve_arg(req), m, pts).basis;
  return ids::build_Xk(m, pts);
}

Json op_fiber(const Json& req) {
  auto b = basis_arg(req);
  auto f = ids::fiber_over_origin(b);
  Json j;
  j["count"] = f.count;
  Json rad = Json::array();
  for (const auto& r : f.radicands) rad.push_back(ids::rat_json(r));
  j["radicands"] = rad;
  if (req.value("list", false)) {
    Json pts = Json::array();
    for (const auto& p : f.points) pts.push_back(hybrid_json(p));
    j["points"] = pts;
  }
  return j;
}

Json op_singular(const Json& req) {
  long m = m_arg(req);
  auto b = ids::build_Xk(m, config_points(req, m));
  auto pts = ids::singular_points_Xk(b);
  Json j;
  j["count"] = pts.size();
  j["k"] = b.points.size();
  Json a = Json::array();
  for (const auto& p : pts) {
    Json h = hybrid_json(p);
    h["rank"] = ids::jacobian(b, p).rank;
    a.push_back(h);
  }
  j["points"] = a;
  return j;
}

Json op_jacobian(const Json& req) {
  auto b = basis_arg(req);
  ids::HybridPoint p;
  p.x = ids::json_rat(req.at("x"), "x");
  p.y = ids::json_rat(req.at("y"), "y");
  const auto& signs = req.at("signs");
  for (std::size_t i = 0; i < b.points.size(); ++i) {
    p.radicands.push_back(ids::dist2({p.x, p.y}, b.points[i], b.m));
    p.signs.push_back(i < signs.size() && signs[i].get<int>() < 0 ? -1 : 1);
  }
  auto J = ids::jacobian(b, p);
  Json rows = Json::array();
  for (const auto& row : J.exact) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  return {{"rank", J.rank}, {"rank_exact", J.rank_exact}, {"matrix", rows}};
}

Json op_ck(const Json& req) {
  long m = m_arg(req);
  auto c = ids::build_Ck(curve_arg(req), m, config_points(req, m));
  Json j;
  j["generators"] = texts(c.basis.gens);
  j["origin_fiber_count"] = c.origin_fiber_count ? Json(*c.origin_fiber_count) : Json(nullptr);
  j["bezout_ceiling"] = ids::int_json(c.bezout_ceiling);
  return j;
}

Json op_homogenize(const Json& req) {
  ids::Roster vars = req.contains("vars") ? req["vars"].get<std::vector<std::string>>()
                                          : ids::curve_roster();
  auto p = ids::parse_poly(req.at("poly").get<std::string>(), vars);
  if (p.is_zero()) throw ids::DomainError("cannot homogenize the zero polynomial");
  return {{"homogenized", ids::to_text(ids::homogenize(p))}};
}

Json op_rpolys(const Json& req) {
  long m = m_arg(req);
  auto q = curve_arg(req);
  if (q.is_zero()) throw ids::DomainError("curve polynomial is zero");
  auto r = ids::r_polys(q, m);
  Json plus = Json::array(), minus = Json::array();
  for (const auto& p : r.plus) plus.push_back(ids::to_text(p));
  for (const auto& p : r.minus) minus.push_back(ids::to_text(p));
  Json j{{"degree", r.degree}, {"plus", plus}, {"minus", minus}};
  j["identity_verified"] = ids::verify_r_identity(q, m, r);
  j["top_form_divisible"] = ids::top_form_divisible(q, m);
  auto w = ids::r_nonvanishing_witness(r);
  j["witness"] = w ? Json{{"j", w->first}, {"sign", w->second}} : Json(nullptr);
  return j;
}

Json op_select(const Json& req) {
  auto q = curve_arg(req);
  auto set = ids::pointset_from_json(req.at("set"));
  std::string mode = req.value("mode", std::string("on-curve"));
  ids::SelectMode sm;
  if (mode == "on-curve") sm = ids::SelectMode::OnCurve;
  else if (mode == "off-curve") sm = ids::SelectMode::OffCurve;
  else throw ids::ParseError("mode must be on-curve or off-curve");
  auto r = ids::admissible_select(q, set, req.at("k").get<std::size_t>(), sm);
  Json j{{"sufficient", r.sufficient}, {"selected", r.selected}, {"threshold", r.threshold},
         {"eligible", r.eligible}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.sufficient) j["recheck"] = ids::check_selection(q, set, r.selected, sm).empty();
  return j;
}

Json op_fit(const Json& req) {
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& p : points_arg(req.at("points"))) pts.emplace_back(p.x, p.t);
  auto f = ids::fit_rational_curve(pts, req.at("d").get<int>());
  if (!f) return {{"found", false}};
  return {{"found", true}, {"poly", ids::canonical_text(*f)}};
}

Json op_monodromy(const Json& req) {
  long m = m_arg(req);
  auto pts = config_points(req, m);
  const std::size_t k = pts.size();
  std::vector<std::vector<int>> patterns;
  if (req.contains("windings")) {
    patterns.push_back(req["windings"].get<std::vector<int>>());
  } else {
    if (k > 12) throw ids::PreconditionError("too many points to enumerate every winding pattern");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> w(k, 0);
      for (std::size_t j = 0; j < k; ++j) w[j] = (mask >> j) & 1;
      patterns.push_back(w);
    }
  }
  Json runs = Json::array();
  bool all = true;
  for (const auto& w : patterns) {
    auto loop = ids::lasso_loop(m, pts, w);
    auto measured = ids::winding_numbers(loop, ids::branch_points(m, pts));
    auto signs = ids::monodromy_signs(m, pts, loop);
    std::vector<int> predicted;
    for (int n : measured) predicted.push_back(n % 2 == 0 ? 1 : -1);
    bool match = predicted == signs;
    all = all && match;
    runs.push_back({{"windings", measured}, {"signs", signs}, {"predicted", predicted},
                    {"match", match}});
  }
  return {{"all_match", all}, {"loops", runs}};
}

Json clique_json(const ids::CliqueResult& r) {
  Json cl = Json::array();
  for (const auto& s : r.cliques) cl.push_back(ids::pointset_to_json(s));
  return {{"max_size", r.max_size}, {"truncated", r.truncated}, {"nodes", r.nodes},
          {"cliques", cl}};
}

ids::CliqueFlags flags_from(const Json& j, unsigned workers) {
  ids::CliqueFlags f;
  f.require_noncollinear = j.value("require_noncollinear", false);
  f.require_erdos = j.value("require_erdos", false);
  if (j.contains("target") && !j["target"].is_null()) f.target_size = j["target"].get<std::size_t>();
  f.max_results = j.value("max_results", std::size_t{1000});
  f.workers = workers;
  return f;
}

}  // namespace

extern "C" {

const char* ids_last_error(void) { return g_last_error.c_str(); }
const char* ids_version(void) { return "1.0.0"; }
void ids_string_free(char* s) { std::free(s); }

ids_status ids_pointset_from_json(const char* json, ids_pointset** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = wrap(ids::pointset_from_json(ids::parse_json_text(json)));
  });
}

ids_status ids_pointset_read_file(const char* path, ids_pointset** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(ids::read_pointset_file(path));
  });
}

ids_status ids_pointset_to_json(const ids_pointset* s, char** out) {
  return guard([&] {
    need(s, "pointset");
    emit(out, ids::pointset_to_json(s->ps));
  });
}

ids_status ids_pointset_write_file(const ids_pointset* s, const char* path) {
  return guard([&] {
    need(s, "pointset");
    need(path, "path");
    ids::write_pointset_file(path, s->ps);
  });
}

size_t ids_pointset_size(const ids_pointset* s) { return s ? s->ps.size() : 0; }
void ids_pointset_free(ids_pointset* s) { delete s; }

ids_status ids_verify(const ids_pointset* s, int* accepted, char** certificate) {
  return guard([&] {
    need(s, "pointset");
    auto c = ids::verify_ids(s->ps);
    if (accepted) *accepted = c.accepted ? 1 : 0;
    if (certificate) emit(certificate, certificate_json(c));
  });
}

ids_status ids_normalize(const char* matrix_json, ids_pointset** out) {
  return guard([&] {
    need(matrix_json, "matrix");
    need(out, "out");
    auto dm = ids::distance_matrix_from_json(ids::parse_json_text(matrix_json));
    auto s = ids::reconstruct_from_distances(dm);
    if (ids::distance_matrix(s).d != dm.d)
      throw std::logic_error("reconstruction does not reproduce the matrix");
    *out = wrap(std::move(s));
  });
}

ids_status ids_distance_matrix(const ids_pointset* s, char** matrix_json) {
  return guard([&] {
    need(s, "pointset");
    emit(matrix_json, ids::distance_matrix_to_json(ids::distance_matrix(s->ps)));
  });
}

ids_status ids_construct_apex(const char* h, ids_pointset** out) {
  return guard([&] {
    need(out, "out");
    *out = wrap(ids::collinear_plus_apex(arg_int(h, "h")));
  });
}

ids_status ids_construct_concyclic(const char* triples_json, ids_pointset** out,
                                   char** radius_out) {
  return guard([&] {
    need(triples_json, "triples");
    need(out, "out");
    Json j = ids::parse_json_text(triples_json);
    if (!j.is_array()) throw ids::ParseError("triples must be an array of [a, b, c]");
    std::vector<ids::PythagoreanAngle> angles;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3) throw ids::ParseError("each triple needs three entries");
      angles.push_back({ids::json_int(t[0], "a"), ids::json_int(t[1], "b"), ids::json_int(t[2], "c")});
    }
    auto c = ids::concyclic_pythagorean(angles);
    if (radius_out) *radius_out = dup(c.radius.str());
    *out = wrap(std::move(c.set));
  });
}

ids_status ids_primitive_triples(const char* cmax, char** triples_json) {
  return guard([&] {
    Json a = Json::array();
    for (const auto& t : ids::primitive_triples(arg_int(cmax, "cmax")))
      a.push_back({ids::int_json(t.a), ids::int_json(t.b), ids::int_json(t.c)});
    emit(triples_json, a);
  });
}

ids_status ids_transform(const ids_pointset* s, const char* transform_json, ids_pointset** out) {
  return guard([&] {
    need(s, "pointset");
    need(transform_json, "transform");
    need(out, "out");
    Json j = ids::parse_json_text(transform_json);
    ids::Transform t;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "translate") {
      t.kind = ids::TransformKind::Translate;
      t.dx = ids::json_rat(j.at("dx"), "dx");
      t.dt = ids::json_rat(j.at("dt"), "dt");
    } else if (kind == "reflect") {
      t.kind = ids::TransformKind::ReflectX;
    } else if (kind == "scale") {
      t.kind = ids::TransformKind::Scale;
      t.factor = ids::json_int(j.at("factor"), "factor");
    } else {
      throw ids::ParseError("unknown transform kind '" + kind + "'");
    }
    *out = wrap(ids::transform(s->ps, t));
  });
}

ids_status ids_load_fixture(const char* name, const char* dir, ids_pointset** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = wrap(ids::load_fixture(name, dir ? dir : ""));
  });
}

ids_status ids_bounds_audit(const ids_pointset* s, char** report) {
  return guard([&] {
    need(s, "pointset");
    std::vector<Rat> xs;
    std::optional<ids::NormalizedPoint> apex;
    for (const auto& p : s->ps.points) {
      if (p.t.is_zero()) {
        xs.push_back(p.x);
      } else {
        if (apex) throw ids::DomainError("more than one point off the x-axis");
        apex = p;
      }
    }
    if (!apex) throw ids::DomainError("no apex off the x-axis");
    std::sort(xs.begin(), xs.end());
    auto r = ids::audit_collinear(xs, *apex, s->ps.m);
    Json j;
    j["a"] = ids::int_json(r.a);
    j["b"] = ints_json(r.b);
    j["D"] = ids::int_json(r.D);
    j["q1_minus_m1"] = ids::rat_json(r.q1_minus_m1);
    j["target"] = ids::int_json(r.target);
    j["tau_target"] = ids::int_json(r.tau_target);
    j["K"] = r.K;
    j["factors"] = ints_json(r.factors);
    j["distinct_divisors"] = r.distinct_divisors;
    j["identity_checked"] = r.identity_checked;
    emit(report, j);
  });
}

ids_status ids_bounds_radius(const char* d1, const char* d2, const char* d3, char** report) {
  return guard([&] {
    auto t = ids::canonical_radius(arg_int(d1, "d1"), arg_int(d2, "d2"), arg_int(d3, "d3"));
    Json flips = Json::array();
    for (const auto& f : t.flips)
      flips.push_back({{"ell_before", ids::int_json(f.ell_before)},
                       {"D1", ids::int_json(f.D1)},
                       {"D2", ids::int_json(f.D2)},
                       {"ell_after", ids::int_json(f.ell_after)}});
    Json j;
    j["R2"] = ids::rat_json(t.R2);
    j["l1"] = ids::int_json(t.l1);
    j["l2"] = ids::int_json(t.l2);
    j["D"] = ids::int_json(t.D);
    j["dilation"] = ids::int_json(t.dilation);
    j["l3"] = ids::int_json(t.l3);
    j["flips"] = flips;
    j["n"] = ids::int_json(t.result.n);
    j["canonical_D"] = ids::int_json(t.result.D);
    j["inequalities"] = t.inequalities;
    emit(report, j);
  });
}

ids_status ids_bounds_capacity(const char* n, const char* D, char** report) {
  return guard([&] {
    auto r = ids::circle_capacity({arg_int(n, "n"), arg_int(D, "D")});
    emit(report, Json{{"n", ids::int_json(r.canonical.n)},
                      {"D", ids::int_json(r.canonical.D)},
                      {"n1", ids::int_json(r.n1)},
                      {"n2", ids::int_json(r.n2)},
                      {"capacity", ids::int_json(r.capacity)}});
  });
}

ids_status ids_bounds_represent(const char* D, const char* M, char** report) {
  return guard([&] {
    Int d = arg_int(D, "D"), mm = arg_int(M, "M");
    Json j{{"D", ids::int_json(d)}, {"M", ids::int_json(mm)},
           {"count", ids::int_json(ids::count_representations_cornacchia(d, mm))}};
    if (mm <= Int("1000000000000") / (d > 0 ? d : Int(1)))
      j["brute_force"] = ids::int_json(ids::count_representations(d, mm));
    emit(report, j);
  });
}

ids_status ids_bounds_flip(const ids_pointset* s, const char* k, const char* m1, const char* m2,
                           char** report, ids_pointset** flipped) {
  return guard([&] {
    need(s, "pointset");
    auto r = ids::flip_witness(s->ps, arg_int(k, "k"), arg_int(m1, "m1"), arg_int(m2, "m2"));
    if (report)
      emit(report, Json{{"radius2_before", ids::rat_json(r.radius2_before)},
                        {"radius2_after", ids::rat_json(r.radius2_after)},
                        {"chords_before", ints_json(r.chords_before)},
                        {"chords_after", ints_json(r.chords_after)},
                        {"flipped", ids::pointset_to_json(r.flipped)}});
    if (flipped) *flipped = wrap(std::move(r.flipped));
  });
}

ids_status ids_bounds_large_radius(const ids_pointset* s, const char* N, char** report) {
  return guard([&] {
    need(s, "pointset");
    auto r = ids::large_radius_check(s->ps, arg_int(N, "N"));
    Json j{{"verdict", ids::to_string(r.verdict)},
           {"r2", ids::rat_json(r.r2)},
           {"N", ids::int_json(r.N)},
           {"universal_threshold", ids::int_json(r.universal_threshold)}};
    j["set_threshold"] = r.set_threshold ? ids::rat_json(*r.set_threshold) : Json(nullptr);
    j["chain"] = r.chain;
    emit(report, j);
  });
}

ids_status ids_varieties(const char* request_json, char** report) {
  return guard([&] {
    need(request_json, "request");
    Json req = ids::parse_json_text(request_json);
    std::string op = req.at("op").get<std::string>();
    Json out;
    if (op == "buchberger") out = op_buchberger(req);
    else if (op == "fiber") out = op_fiber(req);
    else if (op == "singular") out = op_singular(req);
    else if (op == "jacobian") out = op_jacobian(req);
    else if (op == "ck") out = op_ck(req);
    else if (op == "homogenize") out = op_homogenize(req);
    else if (op == "rpolys") out = op_rpolys(req);
    else if (op == "select") out = op_select(req);
    else if (op == "fit") out = op_fit(req);
    else if (op == "monodromy") out = op_monodromy(req);
    else throw ids::ParseError("unknown varieties op '" + op + "'");
    emit(report, out);
  });
}

ids_status ids_search(const char* config_json, unsigned workers, ids_progress_fn progress,
                      void* user, char** result) {
  return guard([&] {
    need(config_json, "config");
    Json j = ids::parse_json_text(config_json);
    ids::SearchConfig cfg;
    cfg.a = ids::json_int(j.at("a"), "a");
    cfg.m_values.clear();
    const Json& mj = j.at("m");
    if (mj.is_array()) {
      for (const auto& v : mj) cfg.m_values.push_back(ids::json_int(v, "m").get_si());
    } else {
      cfg.m_values.push_back(ids::json_int(mj, "m").get_si());
    }
    cfg.box = ids::json_int(j.at("box"), "box");
    cfg.radius_bound = ids::json_int(j.at("radius"), "radius");
    auto f = flags_from(j, workers);
    cfg.require_noncollinear = f.require_noncollinear;
    cfg.require_erdos = f.require_erdos;
    cfg.target_size = f.target_size;
    cfg.max_results = f.max_results;
    cfg.workers = workers;
    ids::ProgressFn fn;
    if (progress) fn = [&](const ids::Progress& p) { progress(p.done, p.total, p.best, user); };
    auto res = ids::run_search(cfg, fn);
    Json arr = Json::array();
    for (const auto& r : res) {
      Json e = clique_json(r.cliques);
      e["m"] = r.m;
      e["candidates"] = r.candidate_count;
      arr.push_back(e);
    }
    emit(result, Json{{"results", arr}});
  });
}

ids_status ids_search_pool(const ids_pointset* pool, const char* a, const char* flags_json,
                           unsigned workers, char** result) {
  return guard([&] {
    need(pool, "pool");
    Int aa = arg_int(a, "a");
    Json fj = flags_json ? ids::parse_json_text(flags_json) : Json::object();
    ids::NormalizedPoint a0{Rat(0), Rat(0)}, a1{Rat(aa), Rat(0)};
    std::vector<ids::NormalizedPoint> cand;
    for (const auto& p : pool->ps.points)
      if (!(p == a0) && !(p == a1)) cand.push_back(p);
    auto g = ids::build_graph(pool->ps.m, a0, a1, cand);
    emit(result, clique_json(ids::max_clique(g, flags_from(fj, workers))));
  });
}

ids_status ids_classify(const ids_pointset* s, char** report) {
  return guard([&] {
    need(s, "pointset");
    auto w = ids::structure_witness(s->ps);
    auto a = ids::erdos_admissible(s->ps);
    Json j;
    j["witness"] = {{"kind", w.kind == ids::WitnessKind::Line ? "line" : "circle"},
                    {"defining", w.defining},
                    {"covered", w.covered_count},
                    {"exceptional", w.exceptional}};
    j["erdos_admissible"] = a.admissible;
    j["violation"] = a.violation;
    emit(report, j);
  });
}

ids_status ids_plot_svg(const ids_pointset* s, int with_witness, char** svg) {
  return guard([&] {
    need(s, "pointset");
    need(svg, "svg");
    std::optional<ids::StructureWitness> w;
    if (with_witness && s->ps.size() >= 2) w = ids::structure_witness(s->ps);
    *svg = dup(ids::plot_svg(s->ps, w));
  });
}

}  // extern "C"
