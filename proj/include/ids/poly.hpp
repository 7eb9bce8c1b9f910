#pragma once

// Sparse multivariate polynomials over Q or Q(sqrt d) in the graded
// lexicographic order, where earlier roster variables rank higher. The
// polynomial ring roster for the affine variety X_k is (d1, ..., dk, x, y);
// homogenization appends z.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ids/exactmath.hpp"

namespace ids {

using Exponent = std::vector<unsigned>;
using Roster = std::vector<std::string>;

unsigned total_degree(const Exponent& e);

// -1, 0, 1 for e1 below, equal to, above e2 in grlex. Throws
// PreconditionError on length mismatch.
int grlex_cmp(const Exponent& e1, const Exponent& e2);
int grlex_cmp(const Exponent& e1, const Exponent& e2, const Roster& r1, const Roster& r2);

struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_cmp(a, b) > 0; }
};

bool divides(const Exponent& a, const Exponent& b);  // x^a | x^b
Exponent exp_lcm(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& b, const Exponent& a);  // b - a, requires a | b
Exponent exp_add(const Exponent& a, const Exponent& b);

template <class K>
class MPoly {
 public:
  using Terms = std::map<Exponent, K, GrlexDesc>;

  MPoly() = default;
  MPoly(Roster roster, K zero) : roster_(std::move(roster)), zero_(std::move(zero)) {}

  static MPoly constant(const Roster& r, const K& zero, const K& c) {
    MPoly p(r, zero);
    p.add_term(Exponent(r.size(), 0), c);
    return p;
  }
  static MPoly variable(const Roster& r, const K& zero, const K& one, std::size_t idx) {
    MPoly p(r, zero);
    Exponent e(r.size(), 0);
    e.at(idx) = 1;
    p.add_term(e, one);
    return p;
  }

  const Roster& roster() const { return roster_; }
  const K& zero() const { return zero_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return roster_.size(); }
  std::size_t var_index(const std::string& name) const {
    auto it = std::find(roster_.begin(), roster_.end(), name);
    if (it == roster_.end()) throw PreconditionError("variable '" + name + "' not in roster");
    return static_cast<std::size_t>(it - roster_.begin());
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const K& c) {
    if (e.size() != roster_.size()) throw PreconditionError("exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  const Exponent& lm() const {
    if (is_zero()) throw PreconditionError("leading monomial of the zero polynomial");
    return terms_.begin()->first;
  }
  const K& lc() const {
    if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }

  MPoly& operator+=(const MPoly& o) {
    require_roster(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    require_roster(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly operator-() const {
    MPoly p(roster_, zero_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_roster(b);
    MPoly p(a.roster_, a.zero_);
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) p.add_term(exp_add(e1, e2), c1 * c2);
    return p;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const K& s) const {
    MPoly p(roster_, zero_);
    if (s.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
  }
  MPoly mul_term(const Exponent& m, const K& s) const {
    MPoly p(roster_, zero_);
    if (s.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(exp_add(e, m), c * s);
    return p;
  }

  MPoly pow(unsigned n) const {
    MPoly r = constant(roster_, zero_, one_like());
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  MPoly derivative(std::size_t var) const {
    MPoly p(roster_, zero_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponent f = e;
      f[var] -= 1;
      p.add_term(f, c * from_int(static_cast<long>(e[var])));
    }
    return p;
  }

  // Homogeneous component of the given total degree.
  MPoly component(unsigned deg) const {
    MPoly p(roster_, zero_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == deg) p.terms_.emplace(e, c);
    return p;
  }

  template <class V>
  V evaluate(const std::vector<V>& point, const V& vzero,
             const std::function<V(const K&)>& embed) const {
    if (point.size() != roster_.size()) throw PreconditionError("evaluation arity mismatch");
    V acc = vzero;
    for (const auto& [e, c] : terms_) {
      V t = embed(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  K evaluate(const std::vector<K>& point) const {
    return evaluate<K>(point, zero_, [](const K& c) { return c; });
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.roster_ == b.roster_ && a.terms_ == b.terms_;
  }

  void require_roster(const MPoly& o) const {
    if (roster_ != o.roster_) throw PreconditionError("polynomial roster mismatch");
  }

  K one_like() const { return from_int(1); }
  K from_int(long v) const;

 private:
  Roster roster_;
  K zero_ = default_zero();
  static K default_zero();
  Terms terms_;
};

template <>
inline Rat MPoly<Rat>::default_zero() {
  return Rat(0);
}
template <>
inline Quad MPoly<Quad>::default_zero() {
  return Quad(Rat(0), Rat(0), -1);
}
template <>
inline Rat MPoly<Rat>::from_int(long v) const {
  return Rat(v);
}
template <>
inline Quad MPoly<Quad>::from_int(long v) const {
  return Quad(Rat(v), Rat(0), zero_.d());
}

using RPoly = MPoly<Rat>;

RPoly rpoly_zero(const Roster& r);
RPoly rpoly_const(const Roster& r, const Rat& c);
RPoly rpoly_var(const Roster& r, const std::string& name);

// Over Q(sqrt d) the zero element carries d.
using QPoly = MPoly<Quad>;
QPoly qpoly_const(const Roster& r, const Quad& c);
QPoly qpoly_var(const Roster& r, long d, std::size_t idx);

// Substitute each roster variable of p by a polynomial over Q(sqrt d).
QPoly substitute(const RPoly& p, const std::vector<QPoly>& images);

// Division algorithm: f = sum q_i g_i + r.
struct DivisionResult {
  std::vector<RPoly> quotients;
  RPoly remainder;
};

DivisionResult mdiv(const RPoly& f, const std::vector<RPoly>& G);

// Checks f = sum q_i g_i + r, that no term of r is divisible by any lm(g_i),
// and that lm(f) >= lm(q_i g_i) whenever q_i g_i != 0.
bool check_division(const RPoly& f, const std::vector<RPoly>& G, const DivisionResult& d);

RPoly s_poly(const RPoly& f, const RPoly& g);

// z^{deg Q} Q(vars / z) with z appended to the roster.
RPoly homogenize(const RPoly& q, const std::string& zname = "z");

// Exact rational coefficients, terms in descending grlex, e.g.
// "-d1^2 + x^2 - 2*x + y^2 + 1".
std::string to_text(const RPoly& p);
// Integer-scaled primitive form with positive leading coefficient.
std::string canonical_text(const RPoly& p);
RPoly primitive_part(const RPoly& p);

// Parses sums of products of rational literals, roster variables, powers
// and parenthesized subexpressions. Throws ParseError.
RPoly parse_poly(const std::string& text, const Roster& roster);

std::string to_text(const QPoly& p);

// Univariate helpers over a one-variable roster.
QPoly embed(const RPoly& p, long d);
QPoly upoly_rem(const QPoly& a, const QPoly& b);
QPoly upoly_gcd(const QPoly& a, const QPoly& b);  // monic, zero when both are zero
// Smallest exponent carrying a nonzero coefficient; the zero polynomial has
// no order and std::nullopt is returned.
std::optional<unsigned> upoly_order(const QPoly& p);
bool rpoly_univariate_divides(const RPoly& divisor, const RPoly& f);

}  // namespace ids
