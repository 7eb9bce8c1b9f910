#include "ids/bounds.hpp"

#include <set>

namespace ids {

LineAuditReport audit_collinear(const std::vector<Rat>& line_xs, const NormalizedPoint& apex,
                                long m) {
  if (line_xs.size() < 2) throw PreconditionError("audit_collinear needs at least two line points");
  for (std::size_t i = 1; i < line_xs.size(); ++i)
    if (!(line_xs[i - 1] < line_xs[i]))
      throw PreconditionError("line points must be strictly increasing");
  if (apex.t.is_zero()) throw DomainError("apex lies on the line");

  PointSet all;
  all.m = m;
  all.points.push_back(apex);
  for (const auto& x : line_xs) all.points.push_back({x, Rat(0)});
  auto cert = verify_ids(all);
  if (!cert.accepted)
    throw DomainError("non-integer distance between points " + std::to_string(cert.bad_i) +
                      " and " + std::to_string(cert.bad_j) + " (apex is index 0)");

  LineAuditReport r;
  r.K = line_xs.size();
  r.a = cert.distances[1][r.K];
  for (std::size_t i = 0; i < r.K; ++i) r.b.push_back(cert.distances[0][i + 1]);
  const Int& b1 = r.b.front();
  const Int& bK = r.b.back();
  Int num = b1 * b1 - bK * bK + r.a * r.a;
  r.q1_minus_m1 = Rat(num, Int(2 * r.a));
  if (r.q1_minus_m1 != apex.x - line_xs.front())
    throw DomainError("closed form for q1 - m1 disagrees with the apex position");
  Int g = gcd(num, Int(2 * r.a));
  r.D = 2 * r.a / g;

  Rat height2 = Rat(m) * apex.t * apex.t;
  Rat target = Rat(r.D * r.D) * height2;
  if (!target.is_integer()) throw DomainError("D^2 q2^2 is not an integer");
  r.target = target.num();
  r.tau_target = tau(r.target);

  bool ok = true;
  std::set<Int> distinct;
  for (std::size_t i = 0; i < r.K; ++i) {
    Rat s = Rat(r.D) * (apex.x - line_xs[i]);
    if (!s.is_integer()) {
      ok = false;
      continue;
    }
    Int Db = r.D * r.b[i];
    Int f1 = Db + s.num(), f2 = Db - s.num();
    if (f1 * f2 != r.target) ok = false;
    if (f1 <= 0 || r.target % f1 != 0) ok = false;
    r.factors.push_back(f1);
    distinct.insert(f1);
  }
  r.identity_checked = ok;
  r.distinct_divisors = distinct.size();
  return r;
}

RadiusTrace canonical_radius(const Int& d1, const Int& d2, const Int& d3) {
  RadiusTrace tr;
  tr.R2 = circumradius2(Rat(d1), Rat(d2), Rat(d3));
  const Int p = tr.R2.num(), q = tr.R2.den();
  auto sf = squarefree_decomp(Int(p * q));
  tr.D = sf.squarefree;
  Int sD = sf.square * tr.D;
  Int g = gcd(sD, q);
  tr.l1 = sD / g;
  tr.l2 = q / g;
  Int g2 = gcd(Int(2), tr.l2);
  tr.dilation = tr.l2 / g2;
  tr.l3 = 2 * tr.l1 / g2;
  tr.inequalities.push_back("c(" + tr.l1.get_str() + "/(" + tr.l2.get_str() + " sqrt " +
                            tr.D.get_str() + ")) <= c(" + tr.l3.get_str() + "/(2 sqrt " +
                            tr.D.get_str() + "))  [dilation by " + tr.dilation.get_str() + "]");
  Int ell = tr.l3;
  for (;;) {
    Int D1 = gcd(ell, tr.D);
    if (D1 == 1) break;
    FlipStep st{ell, D1, tr.D / D1, ell / D1};
    tr.inequalities.push_back("c(" + st.ell_after.get_str() + " sqrt " + D1.get_str() +
                              "/(2 sqrt " + st.D2.get_str() + ")) <= c(" +
                              st.ell_after.get_str() + "/(2 sqrt " + tr.D.get_str() +
                              "))  [flip]");
    tr.flips.push_back(st);
    ell = st.ell_after;
  }
  tr.result = CanonicalRadius{ell, tr.D};
  return tr;
}

Circle circumcircle(const NormalizedPoint& p1, const NormalizedPoint& p2,
                    const NormalizedPoint& p3, long m) {
  if (collinear3(p1, p2, p3, m)) throw DomainError("circumcircle of collinear points");
  const Rat M(m);
  auto w = [&](const NormalizedPoint& p) { return p.x * p.x + M * p.t * p.t; };
  Rat a11 = Rat(2) * (p2.x - p1.x), a12 = Rat(2) * M * (p2.t - p1.t), b1 = w(p2) - w(p1);
  Rat a21 = Rat(2) * (p3.x - p1.x), a22 = Rat(2) * M * (p3.t - p1.t), b2 = w(p3) - w(p1);
  Rat det = a11 * a22 - a12 * a21;
  Circle c;
  c.center.x = (b1 * a22 - a12 * b2) / det;
  c.center.t = (a11 * b2 - b1 * a21) / det;
  c.r2 = dist2(c.center, p1, m);
  return c;
}

namespace {

Circle circle_through(const PointSet& s) {
  const auto& p = s.points;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (!collinear3(p[i], p[j], p[k], s.m)) return circumcircle(p[i], p[j], p[k], s.m);
  throw DomainError("unknown circle: no three non-collinear points");
}

void require_on_circle(const PointSet& s, const Circle& c) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (dist2(s.points[i], c.center, s.m) != c.r2)
      throw DomainError("point " + std::to_string(i) + " is not on the circle");
}

}  // namespace

FlipResult flip_witness(const PointSet& s, const Int& k, const Int& m1, const Int& m2) {
  if (s.size() < 3) throw PreconditionError("flip_witness needs at least three points");
  if (k < 1 || m1 < 1 || m2 < 1) throw PreconditionError("k, m1, m2 must be positive");
  if (!is_squarefree(m1) || !is_squarefree(m2))
    throw PreconditionError("m1 and m2 must be squarefree");
  if (gcd(Int(k * m1), m2) != 1) throw PreconditionError("gcd(k m1, m2) must be 1");
  auto cert = verify_ids(s);
  if (!cert.accepted) throw DomainError("input is not an integer distance set");
  Circle c = circle_through(s);
  require_on_circle(s, c);
  Rat expected = Rat(Int(k * k * m1), Int(4 * m2));
  if (c.r2 != expected)
    throw DomainError("circle has r^2 = " + c.r2.str() + ", expected " + expected.str());

  FlipResult out;
  out.radius2_before = c.r2;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int& e = cert.distances[i][j];
      out.chords_before.push_back(e);
      if (e % m1 != 0)
        throw DomainError("counterexample: chord " + e.get_str() + " between points " +
                          std::to_string(i) + " and " + std::to_string(j) +
                          " is not divisible by " + m1.get_str());
    }
  out.flipped = s;
  out.flipped.M.reset();
  for (auto& p : out.flipped.points) {
    p.x /= Rat(m1);
    p.t /= Rat(m1);
  }
  auto cert2 = verify_ids(out.flipped);
  if (!cert2.accepted) throw DomainError("flipped set failed certification");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cert2.distances[i][j] * m1 != cert.distances[i][j])
        throw DomainError("flipped chord mismatch");
      out.chords_after.push_back(cert2.distances[i][j]);
    }
  out.radius2_after = c.r2 / Rat(Int(m1 * m1));
  if (out.radius2_after != Rat(Int(k * k), Int(4 * m1 * m2)))
    throw DomainError("flipped radius mismatch");
  return out;
}

LegendreSplit split_by_legendre(const Int& n, const Int& D) {
  if (n < 1 || D < 1) throw PreconditionError("split_by_legendre needs n, D >= 1");
  if (!is_squarefree(D)) throw PreconditionError("D must be squarefree");
  if (gcd(n, D) != 1) throw DomainError("gcd(n, D) must be 1");
  LegendreSplit r{Int(1), Int(1)};
  for (const auto& pp : factorize(n)) {
    Int pe = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) pe *= pp.prime;
    if (pp.prime == 2 || legendre(Int(-D), pp.prime) == 1)
      r.n2 *= pe;
    else
      r.n1 *= pe;
  }
  return r;
}

CircleBoundReport circle_capacity(const CanonicalRadius& cr) {
  if (cr.n < 1 || cr.D < 1 || !is_squarefree(cr.D) || gcd(cr.n, cr.D) != 1)
    throw PreconditionError("invalid canonical radius");
  CircleBoundReport r;
  r.canonical = cr;
  auto sp = split_by_legendre(cr.n, cr.D);
  r.n1 = sp.n1;
  r.n2 = sp.n2;
  Int M = sp.n2 * sp.n2;
  r.capacity = (sp.n2 <= 10000000) ? count_representations(cr.D, M)
                                   : count_representations_cornacchia(cr.D, M);
  return r;
}

std::string to_string(LargeRadiusVerdict v) {
  switch (v) {
    case LargeRadiusVerdict::AtMostTwoConfirmed:
      return "at_most_two_confirmed";
    case LargeRadiusVerdict::SmallRadiusRegime:
      return "small_radius_regime";
    case LargeRadiusVerdict::Contradiction:
      return "contradiction";
  }
  return "unknown";
}

LargeRadiusReport large_radius_check(const PointSet& s, const Int& N,
                                     const std::optional<Circle>& circle) {
  if (N < 1) throw PreconditionError("box bound N must be positive");
  if (s.size() < 2) throw PreconditionError("large_radius_check needs at least two points");
  auto cert = verify_ids(s);
  if (!cert.accepted) throw DomainError("input is not an integer distance set");
  const Rat NN(N * N);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& p = s.points[i];
    if (abs(p.x) > Rat(N) || Rat(s.m) * p.t * p.t > NN)
      throw DomainError("point " + std::to_string(i) + " is outside the box");
  }
  Circle c = circle ? *circle : circle_through(s);
  require_on_circle(s, c);

  LargeRadiusReport r;
  r.r2 = c.r2;
  r.N = N;
  Int N2 = N * N;
  r.universal_threshold = 512 * N2 * N2 * N2;
  r.chain.push_back("integer sides <= sqrt(8) N and 16 Area^2 >= 1 give sin^2(theta) >= 1/(256 N^4)");
  r.chain.push_back("three points on one arc give sin^2(theta) <= 2 N^2 / r^2");
  r.chain.push_back("so r^2 > 512 N^6 = " + r.universal_threshold.get_str() +
                    " leaves room for at most two points");
  if (s.size() >= 3) {
    auto ang = min_angle_cos2(s);
    Rat sin2 = Rat(1) - ang.cos2;
    r.set_threshold = Rat(Int(2 * N2)) / sin2;
    r.chain.push_back("minimal angle of S has sin^2 = " + sin2.str() +
                      ", so three points need r^2 <= " + r.set_threshold->str());
  }
  bool large = c.r2 > Rat(r.universal_threshold);
  if (large) {
    r.verdict = s.size() <= 2 ? LargeRadiusVerdict::AtMostTwoConfirmed
                              : LargeRadiusVerdict::Contradiction;
    r.chain.push_back("r^2 = " + c.r2.str() + " exceeds the threshold");
  } else if (r.set_threshold && c.r2 > *r.set_threshold) {
    r.verdict = LargeRadiusVerdict::Contradiction;
    r.chain.push_back("r^2 = " + c.r2.str() + " exceeds the set threshold");
  } else {
    r.verdict = LargeRadiusVerdict::SmallRadiusRegime;
    r.chain.push_back("r^2 = " + c.r2.str() + " is at most the threshold");
  }
  return r;
}

}  // namespace ids
