#include "ids/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "ids/classify.hpp"
#include "ids/serialize.hpp"

namespace ids {

std::vector<DivisorPair> apex_divisor_pairs(const Int& h) {
  if (h < 1) throw PreconditionError("apex height must be >= 1");
  Int h2 = h * h;
  std::vector<Int> divisors{Int(1)};
  for (const auto& pp : factorize(h2)) {
    std::vector<Int> next;
    for (const auto& d : divisors) {
      Int v = d;
      for (unsigned e = 0; e <= pp.exponent; ++e) {
        next.push_back(v);
        v *= pp.prime;
      }
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<DivisorPair> out;
  for (const auto& d1 : divisors) {
    if (d1 > h) break;
    Int d2 = h2 / d1;
    if ((d2 - d1) % 2 == 0) out.push_back({d1, d2});
  }
  return out;
}

PointSet collinear_plus_apex(const Int& h) {
  PointSet s;
  s.m = 1;
  s.name = "apex_" + to_string(h);
  std::set<Rat> xs;
  for (const auto& [d1, d2] : apex_divisor_pairs(h)) {
    Rat x(Int((d2 - d1) / 2));
    xs.insert(x);
    xs.insert(-x);
  }
  s.points.push_back({Rat(0), Rat(h)});
  for (const auto& x : xs) s.points.push_back({x, Rat(0)});
  return s;
}

std::vector<PythagoreanAngle> primitive_triples(const Int& cmax) {
  std::vector<PythagoreanAngle> out;
  for (Int u = 2; u * u < cmax * 2; ++u)
    for (Int v = 1; v < u; ++v) {
      if ((u - v) % 2 == 0 || gcd(u, v) != 1) continue;
      Int c = u * u + v * v;
      if (c > cmax) break;
      Int a = u * u - v * v, b = 2 * u * v;
      out.push_back({a, b, c});
      out.push_back({b, a, c});
    }
  std::sort(out.begin(), out.end(), [](const PythagoreanAngle& p, const PythagoreanAngle& q) {
    if (p.c != q.c) return p.c < q.c;
    return p.a < q.a;
  });
  return out;
}

ConcyclicSet concyclic_pythagorean(const std::vector<PythagoreanAngle>& angles) {
  std::vector<PythagoreanAngle> red;
  std::set<std::pair<Rat, Rat>> seen;
  for (const auto& ang : angles) {
    if (ang.c <= 0 || ang.a < 0 || ang.b < 0 || ang.a * ang.a + ang.b * ang.b != ang.c * ang.c)
      throw DomainError("not a Pythagorean angle: (" + to_string(ang.a) + ", " +
                        to_string(ang.b) + ", " + to_string(ang.c) + ")");
    Int g = gcd(gcd(ang.a, ang.b), ang.c);
    PythagoreanAngle r{ang.a / g, ang.b / g, ang.c / g};
    if (!seen.insert({Rat(r.a, r.c), Rat(r.b, r.c)}).second)
      throw DomainError("duplicate angle (" + to_string(ang.a) + ", " + to_string(ang.b) + ", " +
                        to_string(ang.c) + ")");
    red.push_back(r);
  }
  Int two_r = 1;
  for (std::size_t i = 0; i < red.size(); ++i) {
    two_r = lcm(two_r, red[i].c);
    for (std::size_t j = i + 1; j < red.size(); ++j) {
      Rat chord(Int(red[i].a * red[j].b - red[i].b * red[j].a), Int(red[i].c * red[j].c));
      two_r = lcm(two_r, chord.den());
    }
  }
  ConcyclicSet out;
  out.radius = Rat(two_r, Int(2));
  out.set.m = 1;
  out.set.name = "concyclic_pythagorean";
  for (const auto& p : red) {
    Rat c2(p.c * p.c);
    Rat x = out.radius * Rat(Int(p.b * p.b - p.a * p.a)) / c2;
    Rat y = out.radius * Rat(Int(2 * p.a * p.b)) / c2;
    out.set.points.push_back({x, y});
  }
  return out;
}

PointSet transform(const PointSet& s, const Transform& op) {
  PointSet out = s;
  switch (op.kind) {
    case TransformKind::Translate: {
      Int den = lattice_denominator(s);
      if (s.M) den = lcm(den, Int(2 * *s.M));
      if (!(op.dx * Rat(den)).is_integer() || !(op.dt * Rat(den)).is_integer())
        throw DomainError("translation vector (" + op.dx.str() + ", " + op.dt.str() +
                          ") is off the lattice (1/" + to_string(den) + ")Z");
      for (auto& p : out.points) {
        p.x += op.dx;
        p.t += op.dt;
      }
      break;
    }
    case TransformKind::ReflectX:
      for (auto& p : out.points) p.t = -p.t;
      break;
    case TransformKind::Scale:
      if (op.factor < 1) throw DomainError("scale factor must be a positive integer");
      for (auto& p : out.points) {
        p.x *= Rat(op.factor);
        p.t *= Rat(op.factor);
      }
      if (out.M) out.M = *out.M * op.factor;
      break;
  }
  return out;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("IDS_FIXTURE_DIR"); env && *env) return env;
#ifdef IDS_DEFAULT_FIXTURE_DIR
  return IDS_DEFAULT_FIXTURE_DIR;
#else
  return "data/fixtures";
#endif
}

PointSet load_fixture(const std::string& name, const std::string& dir) {
  PointSet s;
  if (name == "triangle_345") {
    s.m = 1;
    s.name = name;
    s.points = {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(4)}};
  } else {
    std::filesystem::path p = std::filesystem::path(dir.empty() ? default_fixture_dir() : dir) /
                              (name + ".json");
    if (!std::filesystem::exists(p)) throw ParseError("fixture not found: " + p.string());
    s = read_pointset_file(p.string());
    if (s.name.empty()) s.name = name;
  }
  auto cert = verify_ids(s);
  if (!cert.accepted)
    throw DomainError("fixture '" + name + "' fails certification at pair (" +
                      std::to_string(cert.bad_i) + ", " + std::to_string(cert.bad_j) + ")");
  if (name.rfind("kreisel_kurz", 0) == 0) {
    auto adm = erdos_admissible(s);
    if (!adm.admissible) throw DomainError("fixture '" + name + "' is not Erdos-admissible");
  }
  return s;
}

}  // namespace ids
