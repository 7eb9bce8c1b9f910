#include "ids/varieties.hpp"

#include <random>
#include <set>
#include <sstream>

namespace ids {

Roster xk_roster(std::size_t k) {
  Roster r;
  for (std::size_t j = 1; j <= k; ++j) r.push_back("d" + std::to_string(j));
  r.push_back("x");
  r.push_back("y");
  return r;
}

Roster curve_roster() { return {"x", "y"}; }

RPoly q_generator(const Roster& r, std::size_t j, const NormalizedPoint& p, long m) {
  RPoly x = rpoly_var(r, "x"), y = rpoly_var(r, "y");
  RPoly d = rpoly_var(r, "d" + std::to_string(j + 1));
  RPoly dx = x - rpoly_const(r, p.x);
  RPoly dy = y - rpoly_const(r, p.t);
  return dx * dx + (dy * dy).scaled(Rat(m)) - d * d;
}

namespace {

void check_points(long m, const std::vector<NormalizedPoint>& points) {
  if (m <= 0 || !is_squarefree(Int(m))) throw DomainError("m must be a positive squarefree integer");
  if (points.empty()) throw PreconditionError("at least one point is required");
  std::set<NormalizedPoint> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].x.is_zero() && points[i].t.is_zero())
      throw DomainError("point " + std::to_string(i) + " is the origin");
    if (!seen.insert(points[i]).second)
      throw DomainError("point " + std::to_string(i) + " repeats an earlier point");
  }
}

bool is_curve_roster(const RPoly& q) { return q.roster() == curve_roster(); }

void require_curve(const RPoly& q) {
  if (!is_curve_roster(q)) throw PreconditionError("curve polynomial must be in the variables x, y");
  if (q.is_zero()) throw PreconditionError("curve polynomial is zero");
}

Quad i_sqrt_m(long m) { return Quad(Rat(0), Rat(1), -m); }
Quad qrat(const Rat& r, long m) { return Quad(r, Rat(0), -m); }

// (x, y) of a curve point over Q(sqrt(-m)) evaluated in Q.
Quad eval_curve(const RPoly& q, const Quad& x, const Quad& y) {
  const long d = x.d();
  return q.evaluate<Quad>({x, y}, Quad(Rat(0), Rat(0), d),
                          [d](const Rat& c) { return Quad(c, Rat(0), d); });
}

}  // namespace

IdealBasis build_Xk(long m, const std::vector<NormalizedPoint>& points) {
  check_points(m, points);
  IdealBasis b;
  b.m = m;
  b.points = points;
  Roster r = xk_roster(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) b.gens.push_back(q_generator(r, j, points[j], m));
  return b;
}

RPoly remap(const RPoly& p, const Roster& to) {
  std::vector<std::size_t> idx;
  for (const auto& name : p.roster()) {
    auto it = std::find(to.begin(), to.end(), name);
    if (it == to.end()) throw PreconditionError("variable '" + name + "' missing from target roster");
    idx.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  RPoly out(to, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    Exponent f(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[idx[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

CkBasis build_Ck(const RPoly& curve, long m, const std::vector<NormalizedPoint>& points) {
  require_curve(curve);
  CkBasis out;
  out.basis = build_Xk(m, points);
  const Roster r = xk_roster(points.size());
  out.basis.gens.insert(out.basis.gens.begin(), remap(curve, r));
  out.basis.curve = curve;
  const std::size_t k = points.size();
  if (curve.evaluate({Rat(0), Rat(0)}).is_zero()) out.origin_fiber_count = std::size_t{1} << k;
  Int two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  out.bezout_ceiling = two_k * curve.degree();
  return out;
}

BuchbergerResult buchberger_check(const std::vector<RPoly>& gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw PreconditionError("zero generator");
  BuchbergerResult res;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      RPoly s = s_poly(gens[i], gens[j]);
      DivisionResult d = mdiv(s, gens);
      ++res.pairs_checked;
      if (!d.remainder.is_zero()) {
        res.groebner = false;
        res.witness = BuchbergerFailure{i, j, s, d.remainder};
        return res;
      }
    }
  return res;
}

SqrtExpr::SqrtExpr(const Rat& r) { add(Int(1), r); }

SqrtExpr SqrtExpr::sqrt_of(const Rat& r) {
  if (r.sign() < 0) throw DomainError("square root of a negative rational");
  SqrtExpr e;
  if (r.is_zero()) return e;
  SquarefreeDecomp sd = squarefree_decomp(Int(r.num() * r.den()));
  e.add(sd.squarefree, Rat(sd.square, r.den()));
  return e;
}

void SqrtExpr::add(const Int& radical, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(radical);
  if (it == terms_.end()) {
    terms_.emplace(radical, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SqrtExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Int> SqrtExpr::single_radical() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

Rat SqrtExpr::coefficient(const Int& radical) const {
  auto it = terms_.find(radical);
  return it == terms_.end() ? Rat(0) : it->second;
}

double SqrtExpr::to_double() const {
  double v = 0;
  for (const auto& [r, c] : terms_) v += c.to_double() * std::sqrt(r.get_d());
  return v;
}

std::string SqrtExpr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [r, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (r != 1) s += "*sqrt(" + to_string(r) + ")";
  }
  return s;
}

SqrtExpr& SqrtExpr::operator+=(const SqrtExpr& o) {
  for (const auto& [r, c] : o.terms_) add(r, c);
  return *this;
}

SqrtExpr SqrtExpr::operator-() const {
  SqrtExpr e;
  for (const auto& [r, c] : terms_) e.terms_.emplace(r, -c);
  return e;
}

SqrtExpr operator*(const SqrtExpr& a, const SqrtExpr& b) {
  SqrtExpr out;
  for (const auto& [r1, c1] : a.terms_)
    for (const auto& [r2, c2] : b.terms_) {
      Int g = gcd(r1, r2);
      out.add(Int((r1 / g) * (r2 / g)), c1 * c2 * Rat(g));
    }
  return out;
}

std::vector<SqrtExpr> HybridPoint::coords() const {
  std::vector<SqrtExpr> c;
  for (std::size_t j = 0; j < radicands.size(); ++j) {
    SqrtExpr s = SqrtExpr::sqrt_of(radicands[j]);
    c.push_back(signs[j] < 0 ? -s : s);
  }
  c.emplace_back(x);
  c.emplace_back(y);
  return c;
}

std::vector<std::complex<double>> HybridPoint::numeric() const {
  std::vector<std::complex<double>> v;
  for (const auto& c : coords()) v.emplace_back(c.to_double(), 0.0);
  return v;
}

std::string HybridPoint::str() const {
  std::ostringstream os;
  os << "(x=" << x << ", y=" << y;
  for (std::size_t j = 0; j < radicands.size(); ++j)
    os << ", d" << j + 1 << "=" << (signs[j] < 0 ? "-" : "+") << "sqrt(" << radicands[j] << ")";
  os << ")";
  return os.str();
}

Int height(const std::vector<Rat>& coords) {
  Int L = 1, G = 0;
  for (const auto& c : coords) L = lcm(L, c.den());
  for (const auto& c : coords) G = gcd(G, Int(c.num() * (L / c.den())));
  if (G == 0) throw PreconditionError("projective point with all coordinates zero");
  Int h = 0;
  for (const auto& c : coords) {
    Int v = abs(Int(c.num() * (L / c.den()) / G));
    if (v > h) h = v;
  }
  return h;
}

namespace {

std::vector<HybridPoint> sign_lifts(const Rat& x, const Rat& y, const std::vector<Rat>& radicands,
                                    std::optional<std::size_t> fixed) {
  const std::size_t k = radicands.size();
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < k; ++j)
    if (!fixed || *fixed != j) free.push_back(j);
  std::vector<HybridPoint> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    HybridPoint p{x, y, radicands, std::vector<int>(k, 1)};
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask >> b & 1) p.signs[free[b]] = -1;
    out.push_back(std::move(p));
  }
  return out;
}

SqrtExpr eval_exact(const RPoly& g, const std::vector<SqrtExpr>& c) {
  return g.evaluate<SqrtExpr>(c, SqrtExpr(), [](const Rat& r) { return SqrtExpr(r); });
}

std::size_t rational_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::size_t numeric_rank(std::vector<std::vector<std::complex<double>>> a, double tol) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  double scale = 0;
  for (const auto& row : a)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0) return 0;
  const double eps = tol * std::max(1.0, scale);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) <= eps) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<RPoly>> partials(const IdealBasis& b) {
  std::vector<std::vector<RPoly>> J;
  for (const auto& g : b.gens) {
    std::vector<RPoly> row;
    for (std::size_t v = 0; v < g.nvars(); ++v) row.push_back(g.derivative(v));
    J.push_back(std::move(row));
  }
  return J;
}

void require_basis(const IdealBasis& b) {
  if (b.gens.empty()) throw PreconditionError("empty ideal basis");
}

}  // namespace

bool on_variety(const IdealBasis& b, const HybridPoint& p) {
  require_basis(b);
  auto c = p.coords();
  if (c.size() != b.gens[0].nvars()) throw PreconditionError("point arity does not match the ring");
  for (const auto& g : b.gens)
    if (!eval_exact(g, c).is_zero()) return false;
  return true;
}

OriginFiber fiber_over_origin(const IdealBasis& b) {
  require_basis(b);
  if (b.curve && !b.curve->evaluate({Rat(0), Rat(0)}).is_zero())
    throw DomainError("the curve does not pass through the origin");
  OriginFiber f;
  for (const auto& p : b.points) f.radicands.push_back(p.x * p.x + Rat(b.m) * p.t * p.t);
  f.points = sign_lifts(Rat(0), Rat(0), f.radicands, std::nullopt);
  for (const auto& p : f.points)
    if (!on_variety(b, p)) throw std::logic_error("origin lift fails the generators");
  f.count = f.points.size();
  return f;
}

JacobianResult jacobian(const IdealBasis& b, const HybridPoint& p) {
  require_basis(b);
  if (!on_variety(b, p)) throw DomainError("point is not on the variety");
  auto c = p.coords();
  auto J = partials(b);
  JacobianResult res;
  for (const auto& row : J) {
    std::vector<SqrtExpr> er;
    std::vector<std::complex<double>> nr;
    for (const auto& partial : row) {
      er.push_back(eval_exact(partial, c));
      nr.emplace_back(er.back().to_double(), 0.0);
    }
    res.exact.push_back(std::move(er));
    res.numeric.push_back(std::move(nr));
  }
  // A column whose entries share one radical can be divided by it.
  const std::size_t rows = res.exact.size(), cols = rows ? res.exact[0].size() : 0;
  std::vector<std::vector<Rat>> scaled(rows, std::vector<Rat>(cols));
  bool ok = true;
  for (std::size_t col = 0; col < cols && ok; ++col) {
    std::optional<Int> rad;
    for (std::size_t r = 0; r < rows && ok; ++r) {
      const auto& e = res.exact[r][col];
      if (e.is_zero()) continue;
      auto s = e.single_radical();
      if (!s || (rad && *rad != *s)) ok = false;
      else rad = s;
    }
    if (!ok) break;
    for (std::size_t r = 0; r < rows; ++r)
      scaled[r][col] = rad ? res.exact[r][col].coefficient(*rad) : Rat(0);
  }
  if (ok) {
    res.rank = rational_rank(scaled);
    res.rank_exact = true;
  } else {
    res.rank = numeric_rank(res.numeric, 1e-9);
  }
  return res;
}

JacobianResult jacobian(const IdealBasis& b, const std::vector<std::complex<double>>& p,
                        double tol) {
  require_basis(b);
  using C = std::complex<double>;
  auto embed = [](const Rat& r) { return C(r.to_double(), 0.0); };
  double scale = 1;
  for (const auto& v : p) scale = std::max(scale, std::abs(v));
  for (const auto& g : b.gens) {
    C v = g.evaluate<C>(p, C(0), embed);
    if (std::abs(v) > tol * scale * scale) throw DomainError("point is not on the variety");
  }
  JacobianResult res;
  for (const auto& row : partials(b)) {
    std::vector<C> nr;
    for (const auto& partial : row) nr.push_back(partial.evaluate<C>(p, C(0), embed));
    res.numeric.push_back(std::move(nr));
  }
  res.rank = numeric_rank(res.numeric, tol);
  return res;
}

std::vector<HybridPoint> singular_points_Xk(const IdealBasis& b) {
  require_basis(b);
  if (b.curve) throw PreconditionError("singular_points_Xk expects an X_k basis");
  const std::size_t k = b.points.size();
  std::vector<HybridPoint> out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> rad;
    for (std::size_t i = 0; i < k; ++i) rad.push_back(dist2(b.points[j], b.points[i], b.m));
    for (auto& p : sign_lifts(b.points[j].x, b.points[j].t, rad, j)) {
      if (jacobian(b, p).rank >= k) throw std::logic_error("listed singular point has full rank");
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

// Coefficients of Q_i(x, 1) by power of x.
std::vector<Rat> dehomogenized_component(const RPoly& q, unsigned i) {
  std::vector<Rat> c(i + 1, Rat(0));
  for (const auto& [e, v] : q.terms())
    if (e[0] + e[1] == i) c[e[0]] = v;
  return c;
}

Quad falling_derivative_at(const std::vector<Rat>& coef, unsigned k, const Quad& c) {
  Quad acc = qrat(Rat(0), -c.d());
  for (std::size_t n = k; n < coef.size(); ++n) {
    if (coef[n].is_zero()) continue;
    Int ff = 1;
    for (std::size_t t = n - k + 1; t <= n; ++t) ff *= static_cast<unsigned long>(t);
    Quad p = qrat(Rat(1), -c.d());
    for (std::size_t t = 0; t < n - k; ++t) p *= c;
    acc += p * (coef[n] * Rat(ff));
  }
  return acc;
}

Int factorial(unsigned k) {
  Int f = 1;
  for (unsigned t = 2; t <= k; ++t) f *= t;
  return f;
}

std::vector<QPoly> r_family(const RPoly& q, long m, const Quad& c) {
  const Roster w{"w"};
  const unsigned d = static_cast<unsigned>(q.degree());
  std::vector<QPoly> out;
  for (unsigned j = 0; j <= d; ++j) {
    QPoly R(w, qrat(Rat(0), m));
    for (unsigned k = 0; k <= j; ++k) {
      auto comp = dehomogenized_component(q, d - j + k);
      Quad v = falling_derivative_at(comp, k, c) * Rat(Int(1), factorial(k));
      R.add_term(Exponent{k}, v);
    }
    out.push_back(std::move(R));
  }
  return out;
}

Quad eval_univariate(const QPoly& p, const Quad& w) {
  return p.evaluate(std::vector<Quad>{w});
}

}  // namespace

RPolys r_polys(const RPoly& curve, long m) {
  require_curve(curve);
  if (m <= 0 || !is_squarefree(Int(m))) throw DomainError("m must be a positive squarefree integer");
  RPolys r;
  r.m = m;
  r.degree = curve.degree();
  r.plus = r_family(curve, m, -i_sqrt_m(m));
  r.minus = r_family(curve, m, i_sqrt_m(m));
  return r;
}

bool verify_r_identity(const RPoly& curve, long m, const RPolys& r) {
  require_curve(curve);
  const RPoly h = homogenize(curve);
  const Roster wz{"w", "z"};
  const QPoly w = qpoly_var(wz, -m, 0), z = qpoly_var(wz, -m, 1);
  for (int sgn : {1, -1}) {
    const Quad c = sgn > 0 ? -i_sqrt_m(m) : i_sqrt_m(m);
    QPoly expanded = substitute(h, {qpoly_const(wz, c) + w * z, qpoly_const(wz, qrat(Rat(1), m)), z});
    const auto& fam = sgn > 0 ? r.plus : r.minus;
    if (fam.size() != static_cast<std::size_t>(curve.degree()) + 1) return false;
    std::vector<QPoly> coeffs(fam.size(), QPoly(Roster{"w"}, qrat(Rat(0), m)));
    for (const auto& [e, v] : expanded.terms()) {
      if (e[1] >= coeffs.size()) return false;
      coeffs[e[1]].add_term(Exponent{e[0]}, v);
    }
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (!(coeffs[j] == fam[j])) return false;
      if (!fam[j].is_zero() && fam[j].degree() > static_cast<int>(j)) return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> r_nonvanishing_witness(const RPolys& r) {
  for (int j = 0; j <= r.degree - 2; ++j) {
    if (!r.plus[j].is_zero()) return std::make_pair(j, 1);
    if (!r.minus[j].is_zero()) return std::make_pair(j, -1);
  }
  return std::nullopt;
}

bool top_form_divisible(const RPoly& curve, long m) {
  require_curve(curve);
  const unsigned d = static_cast<unsigned>(curve.degree());
  const Roster xr{"x"};
  RPoly top(xr, Rat(0));
  auto comp = dehomogenized_component(curve, d);
  for (unsigned n = 0; n < comp.size(); ++n) top.add_term(Exponent{n}, comp[n]);
  RPoly x = rpoly_var(xr, "x");
  RPoly base = x * x + rpoly_const(xr, Rat(m));
  return rpoly_univariate_divides(base.pow(d - 1), top);
}

IntersectionOrders intersection_orders(const RPoly& curve, long m, const NormalizedPoint& p) {
  require_curve(curve);
  const Roster sr{"s"};
  const QPoly s = qpoly_var(sr, -m, 0);
  auto cst = [&](const Quad& q) { return qpoly_const(sr, q); };
  const Quad im = i_sqrt_m(m);
  const Quad a = qrat(p.x, m), b = qrat(p.t, m);
  IntersectionOrders o;
  o.n1 = upoly_order(substitute(curve, {cst(a) - cst(im) * s, cst(b) + s}));
  o.n1p = upoly_order(substitute(curve, {cst(a) + cst(im) * s, cst(b) + s}));
  const RPoly h = homogenize(curve);
  const QPoly one = cst(qrat(Rat(1), m));
  o.n2 = upoly_order(substitute(h, {cst(-im) + cst(a + im * b) * s, one, s}));
  o.n2p = upoly_order(substitute(h, {cst(im) + cst(a - im * b) * s, one, s}));
  return o;
}

std::pair<Quad, Quad> midpoint_conjugate(const NormalizedPoint& pj, const NormalizedPoint& pjp,
                                         long m) {
  Quad x(( pj.x + pjp.x) / Rat(2), (pj.t - pjp.t) / Rat(2), -m);
  Quad y((pj.t + pjp.t) / Rat(2), -(pj.x - pjp.x) / Rat(2 * m), -m);
  return {x, y};
}

std::uint64_t selection_threshold(std::size_t k, int degree, SelectMode mode) {
  const std::uint64_t kk = k, d = static_cast<std::uint64_t>(degree);
  if (mode == SelectMode::OffCurve) return 2 + 2 * kk * (kk > 0 ? kk - 1 : 0);
  return 2 + kk * (kk > 0 ? kk - 1 : 0) * d * d + 3 * d * (d >= 2 ? d - 2 : 0);
}

namespace {

struct CircleShape {
  NormalizedPoint center;
};

// Lines and circles (x - a)^2 + m (y - b)^2 = r qualify for the off-curve mode.
std::optional<CircleShape> circle_shape(const RPoly& q, long m) {
  if (q.degree() != 2) return std::nullopt;
  Rat cx2 = q.coeff({2, 0}), cy2 = q.coeff({0, 2}), cxy = q.coeff({1, 1});
  if (cx2.is_zero() || !cxy.is_zero() || cy2 != cx2 * Rat(m)) return std::nullopt;
  Rat e = q.coeff({1, 0}), f = q.coeff({0, 1});
  return CircleShape{{-e / (Rat(2) * cx2), -f / (Rat(2) * cx2 * Rat(m))}};
}

struct SelectContext {
  const RPoly& q;
  long m;
  SelectMode mode;
  RPoly qx, qy;
  std::optional<RPolys> rp;
  std::optional<CircleShape> circle;
};

SelectContext make_context(const RPoly& q, long m, SelectMode mode) {
  SelectContext c{q, m, mode, q.derivative(0), q.derivative(1), std::nullopt, std::nullopt};
  if (mode == SelectMode::OnCurve && q.degree() >= 3) c.rp = r_polys(q, m);
  if (mode == SelectMode::OffCurve) {
    c.circle = circle_shape(q, m);
    if (q.degree() != 1 && !c.circle)
      throw PreconditionError("off-curve selection needs a line or a circle");
  }
  return c;
}

void check_mode(const SelectContext& c, const NormalizedPoint& p, std::size_t idx) {
  bool on = c.q.evaluate({p.x, p.t}).is_zero();
  if (c.mode == SelectMode::OnCurve && !on)
    throw DomainError("candidate " + std::to_string(idx) + " is not on the curve");
  if (c.mode == SelectMode::OffCurve && on)
    throw DomainError("candidate " + std::to_string(idx) + " lies on the curve");
}

bool singular_on_line(const SelectContext& c, const NormalizedPoint& p, int sgn) {
  const Roster sr{"s"};
  const QPoly s = qpoly_var(sr, -c.m, 0);
  const Quad im = i_sqrt_m(c.m);
  QPoly X = qpoly_const(sr, qrat(p.x, c.m)) + qpoly_const(sr, sgn > 0 ? -im : im) * s;
  QPoly Y = qpoly_const(sr, qrat(p.t, c.m)) + s;
  QPoly g = upoly_gcd(substitute(c.q, {X, Y}), substitute(c.qx, {X, Y}));
  g = upoly_gcd(g, substitute(c.qy, {X, Y}));
  return g.is_zero() || g.degree() >= 1;
}

// Per-point filters that count toward the threshold.
std::string basic_exclusion(const SelectContext& c, const NormalizedPoint& p) {
  if (p.x.is_zero() && p.t.is_zero()) return "origin";
  if (c.mode == SelectMode::OnCurve) {
    if (c.qx.evaluate({p.x, p.t}).is_zero() && c.qy.evaluate({p.x, p.t}).is_zero())
      return "singular point of the curve";
  }
  return "";
}

std::string further_exclusion(const SelectContext& c, const NormalizedPoint& p) {
  if (c.mode == SelectMode::OffCurve) {
    if (c.circle && c.circle->center == p) return "center of the circle";
    return "";
  }
  IntersectionOrders o = intersection_orders(c.q, c.m, p);
  if (o.n1 != 1u || o.n1p != 1u) return "tangent to an isotropic line";
  if (singular_on_line(c, p, 1) || singular_on_line(c, p, -1))
    return "isotropic line through a singular point";
  if (c.rp) {
    const Quad im = i_sqrt_m(c.m);
    const Quad wp = qrat(p.x, c.m) + im * p.t, wm = qrat(p.x, c.m) - im * p.t;
    bool all_zero = true;
    for (int l = 0; l <= c.rp->degree - 2 && all_zero; ++l)
      all_zero = eval_univariate(c.rp->plus[l], wp).is_zero() &&
                 eval_univariate(c.rp->minus[l], wm).is_zero();
    if (all_zero) return "common zero of the R polynomials";
  }
  return "";
}

bool pair_ok(const SelectContext& c, const NormalizedPoint& p, const NormalizedPoint& q) {
  for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    auto [x, y] = midpoint_conjugate(a, b, c.m);
    if (eval_curve(c.q, x, y).is_zero()) return false;
  }
  return true;
}

}  // namespace

SelectionReport admissible_select(const RPoly& curve, const PointSet& candidates, std::size_t k,
                                  SelectMode mode) {
  require_curve(curve);
  validate_pointset(candidates);
  if (k == 0) throw PreconditionError("k must be positive");
  const long m = candidates.m;
  SelectContext ctx = make_context(curve, m, mode);
  const auto& pts = candidates.points;
  for (std::size_t i = 0; i < pts.size(); ++i) check_mode(ctx, pts[i], i);

  SelectionReport rep;
  rep.threshold = selection_threshold(k, curve.degree(), mode);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (basic_exclusion(ctx, pts[i]).empty()) eligible.push_back(i);
  rep.eligible = eligible.size();
  if (rep.eligible < rep.threshold) {
    rep.reason = "only " + std::to_string(rep.eligible) + " eligible candidates, threshold " +
                 std::to_string(rep.threshold);
    return rep;
  }
  for (auto i : eligible) {
    if (!further_exclusion(ctx, pts[i]).empty()) continue;
    bool ok = true;
    for (auto j : rep.selected) ok = ok && pair_ok(ctx, pts[i], pts[j]);
    if (!ok) continue;
    rep.selected.push_back(i);
    if (rep.selected.size() == k) break;
  }
  if (rep.selected.size() < k) {
    rep.reason = "exclusions left " + std::to_string(rep.selected.size()) + " of " +
                 std::to_string(k) + " points";
    rep.selected.clear();
    return rep;
  }
  rep.sufficient = true;
  return rep;
}

std::string check_selection(const RPoly& curve, const PointSet& candidates,
                            const std::vector<std::size_t>& chosen, SelectMode mode) {
  require_curve(curve);
  const long m = candidates.m;
  SelectContext ctx = make_context(curve, m, mode);
  std::vector<NormalizedPoint> pts;
  for (auto i : chosen) {
    if (i >= candidates.size()) return "index out of range";
    pts.push_back(candidates.points[i]);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool on = curve.evaluate({pts[i].x, pts[i].t}).is_zero();
    if ((mode == SelectMode::OnCurve) != on) return "point " + std::to_string(i) + " violates the mode";
    std::string why = basic_exclusion(ctx, pts[i]);
    if (why.empty()) why = further_exclusion(ctx, pts[i]);
    if (!why.empty()) return "point " + std::to_string(i) + ": " + why;
  }
  // Intersection of the isotropic lines solved directly as a linear system.
  const Quad im = i_sqrt_m(m);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      Quad u = qrat(pts[i].x, m) + im * pts[i].t;   // x + i sqrt(m) y = u
      Quad v = qrat(pts[j].x, m) - im * pts[j].t;   // x - i sqrt(m) y = v
      Quad x = (u + v) * Rat(1, 2);
      Quad y = (u - v) / (im * Rat(2));
      if (eval_curve(curve, x, y).is_zero())
        return "points " + std::to_string(i) + ", " + std::to_string(j) +
               " meet on the curve along isotropic lines";
    }
  return "";
}

std::optional<RPoly> fit_rational_curve(const std::vector<std::pair<Rat, Rat>>& points, int d) {
  if (d < 1) throw PreconditionError("degree bound must be positive");
  const std::size_t need = static_cast<std::size_t>(d) * d + 1;
  if (points.size() < need)
    throw PreconditionError("need at least " + std::to_string(need) + " points");
  std::set<std::pair<Rat, Rat>> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw PreconditionError("fit points must be distinct");

  std::vector<Exponent> monos;
  for (unsigned t = 0; t <= static_cast<unsigned>(d); ++t)
    for (unsigned a = 0; a <= t; ++a) monos.push_back({a, t - a});
  std::sort(monos.begin(), monos.end(),
            [](const Exponent& a, const Exponent& b) { return grlex_cmp(a, b) < 0; });
  const std::size_t cols = monos.size();
  std::vector<std::vector<Rat>> A;
  for (const auto& [x, y] : points) {
    std::vector<Rat> row;
    for (const auto& e : monos) row.push_back(pow(x, e[0]) * pow(y, e[1]));
    A.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t piv = r;
    while (piv < A.size() && A[piv][c].is_zero()) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[r]);
    Rat inv = Rat(1) / A[r][c];
    for (auto& v : A[r]) v *= inv;
    for (std::size_t rr = 0; rr < A.size(); ++rr) {
      if (rr == r || A[rr][c].is_zero()) continue;
      Rat f = A[rr][c];
      for (std::size_t cc = 0; cc < cols; ++cc) A[rr][cc] -= f * A[r][cc];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::optional<std::size_t> free_col;
  for (std::size_t c = 0; c < cols && !free_col; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
  if (!free_col) return std::nullopt;
  RPoly out(curve_roster(), Rat(0));
  out.add_term(monos[*free_col], Rat(1));
  for (std::size_t row = 0; row < pivot_col.size(); ++row)
    out.add_term(monos[pivot_col[row]], -A[row][*free_col]);
  return primitive_part(out);
}

std::vector<NormalizedPoint> random_points(std::uint64_t seed, std::size_t k, long range) {
  if (range < 1) throw PreconditionError("range must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-range, range), den(1, 4);
  std::set<NormalizedPoint> seen;
  std::vector<NormalizedPoint> out;
  while (out.size() < k) {
    NormalizedPoint p{Rat(Int(num(rng)), Int(den(rng))), Rat(Int(num(rng)), Int(den(rng)))};
    if (p.x.is_zero() && p.t.is_zero()) continue;
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace ids
