#include "ids/geom.hpp"

#include <algorithm>
#include <set>

namespace ids {

void validate_pointset(const PointSet& s) {
  if (s.m < 1 || !is_squarefree(Int(s.m)))
    throw DomainError("m must be a positive squarefree integer, got " + std::to_string(s.m));
  std::set<NormalizedPoint> seen;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (!seen.insert(s.points[i]).second)
      throw DomainError("duplicate point at index " + std::to_string(i));
  }
}

Int lattice_denominator(const PointSet& s) {
  Int d = 2;
  for (const auto& p : s.points) {
    d = lcm(d, p.x.den());
    d = lcm(d, p.t.den());
  }
  return d;
}

Rat dist2(const NormalizedPoint& p, const NormalizedPoint& q, long m) {
  Rat dx = p.x - q.x, dt = p.t - q.t;
  return dx * dx + Rat(m) * dt * dt;
}

IdsCertificate verify_ids(const PointSet& s) {
  if (s.size() < 2) throw PreconditionError("verify_ids needs at least two points");
  validate_pointset(s);
  IdsCertificate cert;
  const std::size_t n = s.size();
  std::vector<std::vector<Int>> dist(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat d2 = dist2(s.points[i], s.points[j], s.m);
      std::optional<Int> r;
      if (d2.is_integer()) r = is_perfect_square(d2.num());
      if (!r) {
        cert.accepted = false;
        cert.bad_i = i;
        cert.bad_j = j;
        cert.bad_dist2 = d2;
        return cert;
      }
      dist[i][j] = dist[j][i] = *r;
    }
  }
  cert.accepted = true;
  cert.distances = std::move(dist);
  return cert;
}

bool collinear3(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                long) {
  Rat det = (p2.x - p1.x) * (p3.t - p1.t) - (p3.x - p1.x) * (p2.t - p1.t);
  return det.is_zero();
}

namespace {

Rat det3(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f,
         const Rat& g, const Rat& h, const Rat& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Rat concyclic_det(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                  const NormalizedPoint& p4, long m) {
  // Subtracting the first row reduces the 4x4 determinant to a 3x3 one.
  auto w = [m](const NormalizedPoint& p) { return p.x * p.x + Rat(m) * p.t * p.t; };
  Rat w1 = w(p1);
  Rat a = w(p2) - w1, b = p2.x - p1.x, c = p2.t - p1.t;
  Rat d = w(p3) - w1, e = p3.x - p1.x, f = p3.t - p1.t;
  Rat g = w(p4) - w1, h = p4.x - p1.x, i = p4.t - p1.t;
  return -det3(a, b, c, d, e, f, g, h, i);
}

ConcyclicResult concyclic4_checked(const NormalizedPoint& p1, const NormalizedPoint& p2,
                                   const NormalizedPoint& p3, const NormalizedPoint& p4, long m) {
  ConcyclicResult r;
  if (collinear3(p1, p2, p3, m) || collinear3(p1, p2, p4, m) || collinear3(p1, p3, p4, m) ||
      collinear3(p2, p3, p4, m)) {
    r.degenerate = true;
    return r;
  }
  r.concyclic = concyclic_det(p1, p2, p3, p4, m).is_zero();
  return r;
}

bool concyclic4(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                const NormalizedPoint& p4, long m) {
  return concyclic4_checked(p1, p2, p3, p4, m).concyclic;
}

Rat circumradius2(const Rat& d1, const Rat& d2, const Rat& d3) {
  Rat f1 = d1 + d2 + d3, f2 = d1 + d2 - d3, f3 = d1 - d2 + d3, f4 = -d1 + d2 + d3;
  if (d1.sign() <= 0 || d2.sign() <= 0 || d3.sign() <= 0 || f2.sign() <= 0 || f3.sign() <= 0 ||
      f4.sign() <= 0)
    throw DomainError("degenerate triangle (" + d1.str() + ", " + d2.str() + ", " + d3.str() +
                      ")");
  Rat p = d1 * d2 * d3;
  return p * p / (f1 * f2 * f3 * f4);
}

DistanceMatrix distance_matrix(const PointSet& s) {
  auto cert = verify_ids(s);
  if (!cert.accepted)
    throw DomainError("not an integer distance set: pair (" + std::to_string(cert.bad_i) + ", " +
                      std::to_string(cert.bad_j) + ") has squared distance " +
                      cert.bad_dist2.str());
  return DistanceMatrix{cert.distances};
}

namespace {

void check_matrix(const DistanceMatrix& dm) {
  const std::size_t n = dm.n();
  if (n < 2) throw DomainError("distance matrix needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    if (dm.d[i].size() != n)
      throw DomainError("distance matrix row " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dm.d[i][i] != 0) throw DomainError("nonzero diagonal at index " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (dm.d[i][j] != dm.d[j][i])
        throw DomainError("asymmetric entry at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      if (i != j && dm.d[i][j] <= 0)
        throw DomainError("non-positive distance at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Int &a = dm.d[i][j], &b = dm.d[j][k], &c = dm.d[i][k];
        if (a > b + c || b > a + c || c > a + b)
          throw DomainError("triangle inequality fails at index " + std::to_string(k) +
                            " (triple " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
      }
}

}  // namespace

PointSet reconstruct_from_distances(const DistanceMatrix& dm) {
  check_matrix(dm);
  const std::size_t n = dm.n();
  std::size_t p1 = 1;
  for (std::size_t i = 2; i < n; ++i)
    if (dm.d[0][i] < dm.d[0][p1]) p1 = i;
  const Int M = dm.d[0][p1];
  const Int twoM = 2 * M;

  PointSet out;
  out.M = M;
  out.points.assign(n, NormalizedPoint{Rat(0), Rat(0)});
  out.points[p1] = NormalizedPoint{Rat(M), Rat(0)};

  std::optional<Int> field;
  std::vector<bool> off_axis(n, false);
  for (std::size_t i = 1; i < n; ++i) {
    if (i == p1) continue;
    const Int& a = dm.d[i][0];
    const Int& b = dm.d[i][p1];
    Rat x(Int(a * a + M * M - b * b), twoM);
    Rat rest = Rat(a * a) - x * x;
    if (rest.sign() < 0)
      throw DomainError("negative squared height at index " + std::to_string(i));
    Rat t(0);
    if (!rest.is_zero()) {
      Rat scaled = rest * Rat(twoM * twoM);
      if (!scaled.is_integer())
        throw DomainError("height off the lattice at index " + std::to_string(i));
      auto sf = squarefree_decomp(scaled.num());
      if (field && *field != sf.squarefree)
        throw DomainError("inconsistent field discriminant at index " + std::to_string(i) +
                          ": " + to_string(sf.squarefree) + " vs " + to_string(*field));
      field = sf.squarefree;
      t = Rat(sf.square, twoM);
      off_axis[i] = true;
    }
    out.points[i] = NormalizedPoint{x, t};
  }
  out.m = field ? field->get_si() : 1;

  std::size_t q = n;
  for (std::size_t i = 1; i < n; ++i)
    if (off_axis[i]) {
      q = i;
      break;
    }
  if (q < n) {
    for (std::size_t i = q + 1; i < n; ++i) {
      if (!off_axis[i]) continue;
      Rat target = Rat(dm.d[i][q] * dm.d[i][q]);
      if (dist2(out.points[i], out.points[q], out.m) == target) continue;
      NormalizedPoint flipped{out.points[i].x, -out.points[i].t};
      if (dist2(flipped, out.points[q], out.m) != target)
        throw DomainError("no consistent sign for index " + std::to_string(i));
      out.points[i] = flipped;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist2(out.points[i], out.points[j], out.m) != Rat(dm.d[i][j] * dm.d[i][j]))
        throw DomainError("matrix not realizable in the plane at index " + std::to_string(j));
  validate_pointset(out);
  return out;
}

Int diameter(const PointSet& s) {
  auto cert = verify_ids(s);
  if (!cert.accepted) throw DomainError("diameter requires a certified integer distance set");
  Int best = 0;
  for (const auto& row : cert.distances)
    for (const auto& v : row) best = std::max(best, v);
  return best;
}

AngleReport min_angle_cos2(const PointSet& s) {
  if (s.size() < 3) throw PreconditionError("min_angle_cos2 needs at least three points");
  const std::size_t n = s.size();
  const Rat m(s.m);
  std::optional<AngleReport> best;
  auto better = [](int sa, const Rat& ca, int sb, const Rat& cb) {
    if (sa != sb) return sa > sb;
    if (sa >= 0) return ca > cb;
    return ca < cb;
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == v) continue;
        const auto &P = s.points[v], &A = s.points[i], &B = s.points[k];
        Rat ux = A.x - P.x, ut = A.t - P.t, vx = B.x - P.x, vt = B.t - P.t;
        Rat dot = ux * vx + m * ut * vt;
        Rat nu = ux * ux + m * ut * ut, nv = vx * vx + m * vt * vt;
        if (nu.is_zero() || nv.is_zero()) continue;
        Rat c2 = dot * dot / (nu * nv);
        if (c2 == Rat(1)) continue;
        int sg = dot.sign();
        if (!best || better(sg, c2, best->cos_sign, best->cos2))
          best = AngleReport{c2, sg, i, v, k};
      }
    }
  }
  if (!best) throw DomainError("all triples are degenerate");
  return *best;
}

}  // namespace ids
