// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 the inputs fail a mathematical requirement,
// 2 unreadable or malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ids/ids.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string message;
};

int exit_code(ids_status s) {
  switch (s) {
    case IDS_OK:
      return 0;
    case IDS_E_PARSE:
      return 2;
    default:
      return 1;
  }
}

void check(ids_status s) {
  if (s != IDS_OK) throw Failure{exit_code(s), ids_last_error()};
}

struct Str {
  char* p = nullptr;
  ~Str() { ids_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Set {
  ids_pointset* p = nullptr;
  ~Set() { ids_pointset_free(p); }
};

Set read_set(const std::string& path) {
  Set s;
  check(ids_pointset_read_file(path.c_str(), &s.p));
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{2, "cannot write '" + path + "'"};
  out << text;
  if (!out) throw Failure{2, "write failed for '" + path + "'"};
}

void emit_set(const Set& s, const std::string& out) {
  if (out.empty()) {
    Str j;
    check(ids_pointset_to_json(s.p, &j.p));
    std::cout << j.str() << "\n";
  } else {
    check(ids_pointset_write_file(s.p, out.c_str()));
  }
}

void print(const Str& s) { std::cout << s.str() << "\n"; }

std::string varieties(const Json& req) {
  Str r;
  check(ids_varieties(req.dump().c_str(), &r.p));
  return r.str();
}

Json points_json(const std::string& path_or_json) {
  std::string text = path_or_json;
  if (!text.empty() && text[0] != '[') text = read_file(path_or_json);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Failure{2, std::string("malformed point list: ") + e.what()};
  }
}

struct PointsArgs {
  long m = 1;
  std::size_t k = 3;
  std::uint64_t seed = 1;
  long range = 20;
  std::string points;
  std::string curve;
};

void add_points_args(CLI::App* sub, PointsArgs& a, bool with_curve) {
  sub->add_option("--m", a.m, "squarefree m")->default_val(1);
  sub->add_option("--k", a.k, "number of random points")->default_val(3);
  sub->add_option("--seed", a.seed, "seed for the random points")->default_val(1);
  sub->add_option("--range", a.range, "numerator bound for random points")->default_val(20);
  sub->add_option("--points", a.points, "JSON list [[x, t], ...] or a file holding it");
  if (with_curve) sub->add_option("--curve", a.curve, "plane curve in x, y");
}

Json points_request(const std::string& op, const PointsArgs& a) {
  Json r{{"op", op}, {"m", a.m}};
  if (!a.points.empty())
    r["points"] = points_json(a.points);
  else
    r["k"] = a.k, r["seed"] = a.seed, r["range"] = a.range;
  if (!a.curve.empty()) r["curve"] = a.curve;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer distance set toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // verify
  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "certify that all pairwise distances are integers");
  verify->add_option("file", verify_file)->required();
  verify->callback([&] {
    action = [&] {
      Set s = read_set(verify_file);
      int ok = 0;
      Str cert;
      check(ids_verify(s.p, &ok, &cert.p));
      print(cert);
      return ok ? 0 : 1;
    };
  });

  // normalize
  std::string norm_file, norm_out;
  auto* normalize = app.add_subcommand("normalize", "lattice form from a distance matrix");
  normalize->add_option("file", norm_file)->required();
  normalize->add_option("-o,--output", norm_out);
  normalize->callback([&] {
    action = [&] {
      Set s;
      check(ids_normalize(read_file(norm_file).c_str(), &s.p));
      emit_set(s, norm_out);
      return 0;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "generate integer distance sets");
  construct->require_subcommand(1);
  std::string out_path, h_value, triples, cmax, fixture_name, fixture_dir, tr_file, tr_kind, tr_dx,
      tr_dt, tr_factor;
  auto* apex = construct->add_subcommand("apex", "collinear points plus an apex at height h");
  apex->set_help_flag("--help", "print this help message and exit");
  apex->add_option("--h", h_value, "apex height")->required();
  apex->add_option("-o,--output", out_path);
  apex->callback([&] {
    action = [&] {
      Set s;
      check(ids_construct_apex(h_value.c_str(), &s.p));
      emit_set(s, out_path);
      return 0;
    };
  });
  auto* conc = construct->add_subcommand("concyclic", "points on a circle from Pythagorean angles");
  conc->add_option("--triples", triples, "a,b,c;a,b,c;...");
  conc->add_option("--cmax", cmax, "use every primitive triple with c <= cmax");
  conc->add_option("-o,--output", out_path);
  conc->callback([&] {
    action = [&] {
      std::string tj;
      if (!cmax.empty()) {
        Str t;
        check(ids_primitive_triples(cmax.c_str(), &t.p));
        tj = t.str();
      } else if (!triples.empty()) {
        Json arr = Json::array();
        std::stringstream ss(triples);
        std::string item;
        while (std::getline(ss, item, ';')) {
          Json t = Json::array();
          std::stringstream is(item);
          std::string v;
          while (std::getline(is, v, ',')) t.push_back(v);
          arr.push_back(t);
        }
        tj = arr.dump();
      } else {
        throw Failure{2, "give --triples or --cmax"};
      }
      Set s;
      Str radius;
      check(ids_construct_concyclic(tj.c_str(), &s.p, &radius.p));
      std::cerr << "radius " << radius.str() << "\n";
      emit_set(s, out_path);
      return 0;
    };
  });
  auto* tr = construct->add_subcommand("transform", "translate, reflect or scale a set");
  tr->add_option("file", tr_file)->required();
  tr->add_option("--kind", tr_kind)->required()->check(CLI::IsMember({"translate", "reflect", "scale"}));
  tr->add_option("--dx", tr_dx)->default_val("0");
  tr->add_option("--dt", tr_dt)->default_val("0");
  tr->add_option("--factor", tr_factor)->default_val("1");
  tr->add_option("-o,--output", out_path);
  tr->callback([&] {
    action = [&] {
      Set s = read_set(tr_file);
      Json t{{"kind", tr_kind}, {"dx", tr_dx}, {"dt", tr_dt}, {"factor", tr_factor}};
      Set o;
      check(ids_transform(s.p, t.dump().c_str(), &o.p));
      emit_set(o, out_path);
      return 0;
    };
  });
  auto* fx = construct->add_subcommand("fixture", "load a stored fixture");
  fx->add_option("name", fixture_name)->required();
  fx->add_option("--dir", fixture_dir);
  fx->add_option("-o,--output", out_path);
  fx->callback([&] {
    action = [&] {
      Set s;
      check(ids_load_fixture(fixture_name.c_str(), fixture_dir.empty() ? nullptr : fixture_dir.c_str(),
                             &s.p));
      emit_set(s, out_path);
      return 0;
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "counting-bound ingredients");
  bounds->require_subcommand(1);
  std::string b_file, d1, d2, d3, n_val, D_val, M_val, k_val, m1, m2, N_val;
  auto* audit = bounds->add_subcommand("audit", "divisor audit of a collinear set with apex");
  audit->add_option("file", b_file)->required();
  audit->callback([&] {
    action = [&] {
      Set s = read_set(b_file);
      Str r;
      check(ids_bounds_audit(s.p, &r.p));
      print(r);
      return 0;
    };
  });
  auto* radius = bounds->add_subcommand("radius", "canonical radius of an integer triangle");
  radius->add_option("--d1", d1)->required();
  radius->add_option("--d2", d2)->required();
  radius->add_option("--d3", d3)->required();
  radius->callback([&] {
    action = [&] {
      Str r;
      check(ids_bounds_radius(d1.c_str(), d2.c_str(), d3.c_str(), &r.p));
      print(r);
      return 0;
    };
  });
  auto* cap = bounds->add_subcommand("capacity", "lattice capacity of radius n / (2 sqrt D)");
  cap->add_option("--n", n_val)->required();
  cap->add_option("--D", D_val)->required();
  cap->callback([&] {
    action = [&] {
      Str r;
      check(ids_bounds_capacity(n_val.c_str(), D_val.c_str(), &r.p));
      print(r);
      return 0;
    };
  });
  auto* rep = bounds->add_subcommand("represent", "count solutions of x^2 + D y^2 = M");
  rep->add_option("--D", D_val)->required();
  rep->add_option("--M", M_val)->required();
  rep->callback([&] {
    action = [&] {
      Str r;
      check(ids_bounds_represent(D_val.c_str(), M_val.c_str(), &r.p));
      print(r);
      return 0;
    };
  });
  auto* flip = bounds->add_subcommand("flip", "flip a concyclic set to a smaller circle");
  flip->add_option("file", b_file)->required();
  flip->add_option("--k", k_val)->required();
  flip->add_option("--m1", m1)->required();
  flip->add_option("--m2", m2)->required();
  flip->add_option("-o,--output", out_path);
  flip->callback([&] {
    action = [&] {
      Set s = read_set(b_file);
      Str r;
      Set f;
      check(ids_bounds_flip(s.p, k_val.c_str(), m1.c_str(), m2.c_str(), &r.p, &f.p));
      if (out_path.empty()) print(r);
      else emit_set(f, out_path);
      return 0;
    };
  });
  auto* large = bounds->add_subcommand("large-radius", "large-radius regime check");
  large->add_option("file", b_file)->required();
  large->add_option("--N", N_val)->required();
  large->callback([&] {
    action = [&] {
      Set s = read_set(b_file);
      Str r;
      check(ids_bounds_large_radius(s.p, N_val.c_str(), &r.p));
      print(r);
      return 0;
    };
  });

  // varieties
  auto* var = app.add_subcommand("varieties", "Groebner, fiber, singular locus, curves, monodromy");
  var->require_subcommand(1);
  PointsArgs pa;
  bool json_out = false;
  auto* bb = var->add_subcommand("buchberger", "Buchberger criterion for the X_k generators");
  add_points_args(bb, pa, false);
  bb->add_flag("--json", json_out);
  bb->callback([&] {
    action = [&] {
      Json r = Json::parse(varieties(points_request("buchberger", pa)));
      bool pass = r["groebner"].get<bool>();
      if (json_out) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "GROEBNER: " << (pass ? "PASS" : "FAIL") << "\n";
        std::cout << "pairs checked: " << r["pairs_checked"].get<std::size_t>() << "\n";
        if (!pass) std::cout << "remainder: " << r["witness"]["remainder"].get<std::string>() << "\n";
      }
      return pass ? 0 : 1;
    };
  });
  bool list_points = false;
  const std::vector<std::pair<const char*, const char*>> point_ops{
      {"fiber", "lifts of the origin to X_k"},
      {"singular", "singular points of X_k"},
      {"ck", "Groebner basis of C_k for a plane curve"},
      {"monodromy", "sheet signs along loops around the branch points"}};
  for (const auto& [op, help] : point_ops) {
    auto* sub = var->add_subcommand(op, help);
    add_points_args(sub, pa, std::string(op) != "singular" && std::string(op) != "monodromy");
    if (std::string(op) == "fiber") sub->add_flag("--list", list_points, "list every lift");
    std::string name = op;
    sub->callback([&, name] {
      action = [&, name] {
        Json req = points_request(name, pa);
        if (name == "fiber") req["list"] = list_points;
        std::string out = varieties(req);
        std::cout << out << "\n";
        if (name == "monodromy") return Json::parse(out)["all_match"].get<bool>() ? 0 : 1;
        return 0;
      };
    });
  }
  std::string poly_text, sel_file, sel_mode = "on-curve", fit_points;
  std::size_t sel_k = 3;
  int fit_d = 1;
  auto* hom = var->add_subcommand("homogenize", "homogenize a polynomial in x, y");
  hom->add_option("--poly", poly_text)->required();
  hom->callback([&] {
    action = [&] {
      std::cout << varieties({{"op", "homogenize"}, {"poly", poly_text}}) << "\n";
      return 0;
    };
  });
  auto* rp = var->add_subcommand("rpolys", "R polynomials of a plane curve");
  rp->add_option("--curve", pa.curve)->required();
  rp->add_option("--m", pa.m)->default_val(1);
  rp->callback([&] {
    action = [&] {
      std::cout << varieties({{"op", "rpolys"}, {"curve", pa.curve}, {"m", pa.m}}) << "\n";
      return 0;
    };
  });
  auto* sel = var->add_subcommand("select", "admissible point selection on or off a curve");
  sel->add_option("--curve", pa.curve)->required();
  sel->add_option("--set", sel_file)->required();
  sel->add_option("--k", sel_k)->required();
  sel->add_option("--mode", sel_mode)->check(CLI::IsMember({"on-curve", "off-curve"}));
  sel->callback([&] {
    action = [&] {
      Json set;
      try {
        set = Json::parse(read_file(sel_file));
      } catch (const Json::exception& e) {
        throw Failure{2, std::string("malformed point set: ") + e.what()};
      }
      std::string out = varieties(
          {{"op", "select"}, {"curve", pa.curve}, {"set", set}, {"k", sel_k}, {"mode", sel_mode}});
      std::cout << out << "\n";
      return Json::parse(out)["sufficient"].get<bool>() ? 0 : 1;
    };
  });
  auto* fit = var->add_subcommand("fit", "curve of degree <= d through rational points");
  fit->add_option("--points", fit_points)->required();
  fit->add_option("--d", fit_d)->required();
  fit->callback([&] {
    action = [&] {
      std::cout << varieties({{"op", "fit"}, {"points", points_json(fit_points)}, {"d", fit_d}})
                << "\n";
      return 0;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "two-anchor exhaustive search");
  std::string s_a = "1", s_box = "10", s_radius = "10", s_m = "1", s_pool;
  std::size_t s_target = 0, s_max = 1000;
  unsigned s_workers = 1;
  bool s_noncol = false, s_erdos = false, s_progress = false;
  search->add_option("--a", s_a, "anchor separation")->default_val("1");
  search->add_option("--m", s_m, "m or a comma-separated list")->default_val("1");
  search->add_option("--box", s_box)->default_val("10");
  search->add_option("--radius", s_radius)->default_val("10");
  search->add_option("--target", s_target, "only report cliques of at least this size");
  search->add_option("--workers", s_workers)->default_val(1);
  search->add_option("--max-results", s_max)->default_val(1000);
  search->add_option("--pool", s_pool, "search this point set instead of the candidate grid");
  search->add_flag("--noncollinear", s_noncol);
  search->add_flag("--erdos", s_erdos);
  search->add_flag("--progress", s_progress);
  search->callback([&] {
    action = [&] {
      Json flags{{"require_noncollinear", s_noncol}, {"require_erdos", s_erdos},
                 {"max_results", s_max}};
      if (s_target) flags["target"] = s_target;
      Str r;
      if (!s_pool.empty()) {
        Set pool = read_set(s_pool);
        check(ids_search_pool(pool.p, s_a.c_str(), flags.dump().c_str(), s_workers, &r.p));
        Json res = Json::parse(r.str());
        res["type"] = "result";
        std::cout << res.dump() << "\n";
        return 0;
      }
      Json cfg = flags;
      cfg["a"] = s_a;
      cfg["box"] = s_box;
      cfg["radius"] = s_radius;
      Json ms = Json::array();
      std::stringstream ss(s_m);
      std::string item;
      while (std::getline(ss, item, ',')) ms.push_back(item);
      cfg["m"] = ms;
      auto cb = [](size_t done, size_t total, size_t best, void*) {
        Json p{{"type", "progress"}, {"done", done}, {"total", total}, {"best", best}};
        std::cout << p.dump() << "\n";
      };
      check(ids_search(cfg.dump().c_str(), s_workers, s_progress ? +cb : nullptr, nullptr, &r.p));
      Json all = Json::parse(r.str());
      for (auto& res : all["results"]) {
        res["type"] = "result";
        std::cout << res.dump() << "\n";
      }
      return 0;
    };
  });

  // classify
  std::string c_file;
  auto* classify = app.add_subcommand("classify", "line or circle witness and admissibility");
  classify->add_option("file", c_file)->required();
  classify->callback([&] {
    action = [&] {
      Set s = read_set(c_file);
      Str r;
      check(ids_classify(s.p, &r.p));
      print(r);
      return 0;
    };
  });

  // plot
  std::string p_file, p_out;
  bool no_witness = false;
  auto* plot = app.add_subcommand("plot", "SVG drawing with the structure witness");
  plot->add_option("file", p_file)->required();
  plot->add_option("-o,--output", p_out);
  plot->add_flag("--no-witness", no_witness);
  plot->callback([&] {
    action = [&] {
      Set s = read_set(p_file);
      Str svg;
      check(ids_plot_svg(s.p, no_witness ? 0 : 1, &svg.p));
      write_out(p_out, svg.str());
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
