#include "ids/poly.hpp"

#include <cctype>
#include <sstream>

namespace ids {

unsigned total_degree(const Exponent& e) {
  unsigned t = 0;
  for (auto v : e) t += v;
  return t;
}

int grlex_cmp(const Exponent& e1, const Exponent& e2) {
  if (e1.size() != e2.size()) throw PreconditionError("grlex comparison of different arities");
  unsigned t1 = total_degree(e1), t2 = total_degree(e2);
  if (t1 != t2) return t1 < t2 ? -1 : 1;
  for (std::size_t i = 0; i < e1.size(); ++i)
    if (e1[i] != e2[i]) return e1[i] < e2[i] ? -1 : 1;
  return 0;
}

int grlex_cmp(const Exponent& e1, const Exponent& e2, const Roster& r1, const Roster& r2) {
  if (r1 != r2) throw PreconditionError("grlex comparison across different rosters");
  return grlex_cmp(e1, e2);
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent exp_sub(const Exponent& b, const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) throw PreconditionError("monomial does not divide");
    r[i] = b[i] - a[i];
  }
  return r;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw PreconditionError("exponent length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RPoly rpoly_zero(const Roster& r) { return RPoly(r, Rat(0)); }
RPoly rpoly_const(const Roster& r, const Rat& c) { return RPoly::constant(r, Rat(0), c); }
RPoly rpoly_var(const Roster& r, const std::string& name) {
  RPoly z(r, Rat(0));
  return RPoly::variable(r, Rat(0), Rat(1), z.var_index(name));
}

QPoly qpoly_const(const Roster& r, const Quad& c) {
  return QPoly::constant(r, Quad(Rat(0), Rat(0), c.d()), c);
}
QPoly qpoly_var(const Roster& r, long d, std::size_t idx) {
  return QPoly::variable(r, Quad(Rat(0), Rat(0), d), Quad(Rat(1), Rat(0), d), idx);
}

QPoly substitute(const RPoly& p, const std::vector<QPoly>& images) {
  if (images.size() != p.nvars()) throw PreconditionError("substitution arity mismatch");
  if (images.empty()) throw PreconditionError("substitution needs at least one image");
  const Roster& target = images[0].roster();
  const long d = images[0].zero().d();
  for (const auto& im : images)
    if (im.roster() != target || im.zero().d() != d)
      throw PreconditionError("substitution images must share a ring");
  std::vector<std::vector<QPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const QPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(qpoly_const(target, Quad(Rat(1), Rat(0), d)));
    while (v.size() <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  QPoly out(target, Quad(Rat(0), Rat(0), d));
  for (const auto& [e, c] : p.terms()) {
    QPoly t = qpoly_const(target, Quad(c, Rat(0), d));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

namespace {

template <class K>
struct DivOut {
  std::vector<MPoly<K>> q;
  MPoly<K> r;
};

template <class K>
DivOut<K> divide_impl(const MPoly<K>& f, const std::vector<MPoly<K>>& G) {
  DivOut<K> out;
  for (const auto& g : G) {
    f.require_roster(g);
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    out.q.emplace_back(f.roster(), f.zero());
  }
  out.r = MPoly<K>(f.roster(), f.zero());
  MPoly<K> p = f;
  while (!p.is_zero()) {
    const Exponent lm = p.lm();
    const K lc = p.lc();
    bool divided = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!divides(G[i].lm(), lm)) continue;
      Exponent m = exp_sub(lm, G[i].lm());
      K c = lc / G[i].lc();
      out.q[i].add_term(m, c);
      p -= G[i].mul_term(m, c);
      divided = true;
      break;
    }
    if (!divided) {
      out.r.add_term(lm, lc);
      MPoly<K> t(f.roster(), f.zero());
      t.add_term(lm, lc);
      p -= t;
    }
  }
  return out;
}

}  // namespace

DivisionResult mdiv(const RPoly& f, const std::vector<RPoly>& G) {
  auto o = divide_impl(f, G);
  DivisionResult d{std::move(o.q), std::move(o.r)};
  if (!check_division(f, G, d)) throw std::logic_error("division postcondition failed");
  return d;
}

bool check_division(const RPoly& f, const std::vector<RPoly>& G, const DivisionResult& d) {
  if (d.quotients.size() != G.size()) return false;
  RPoly sum = d.remainder;
  for (std::size_t i = 0; i < G.size(); ++i) {
    RPoly prod = d.quotients[i] * G[i];
    if (!prod.is_zero() && !f.is_zero() && grlex_cmp(prod.lm(), f.lm()) > 0) return false;
    if (!prod.is_zero() && f.is_zero()) return false;
    sum += prod;
  }
  if (!(sum == f)) return false;
  for (const auto& [e, c] : d.remainder.terms())
    for (const auto& g : G)
      if (divides(g.lm(), e)) return false;
  return true;
}

RPoly s_poly(const RPoly& f, const RPoly& g) {
  f.require_roster(g);
  const Exponent L = exp_lcm(f.lm(), g.lm());
  return f.mul_term(exp_sub(L, f.lm()), Rat(1) / f.lc()) -
         g.mul_term(exp_sub(L, g.lm()), Rat(1) / g.lc());
}

RPoly homogenize(const RPoly& q, const std::string& zname) {
  if (q.is_zero()) throw PreconditionError("cannot homogenize the zero polynomial");
  Roster r = q.roster();
  if (std::find(r.begin(), r.end(), zname) != r.end())
    throw PreconditionError("homogenizing variable already in roster");
  r.push_back(zname);
  RPoly h(r, Rat(0));
  const int D = q.degree();
  for (const auto& [e, c] : q.terms()) {
    Exponent f = e;
    f.push_back(static_cast<unsigned>(D) - total_degree(e));
    h.add_term(f, c);
  }
  return h;
}

namespace {

std::string monomial_text(const Exponent& e, const Roster& r) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += r[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

template <class K, class CoefFn>
std::string poly_text(const MPoly<K>& p, CoefFn coef) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    auto [negative, mag, is_one] = coef(c);
    std::string mono = monomial_text(e, p.roster());
    std::string body;
    if (mono.empty())
      body = mag;
    else if (is_one)
      body = mono;
    else
      body = mag + "*" + mono;
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace

std::string to_text(const RPoly& p) {
  return poly_text(p, [](const Rat& c) {
    return std::tuple<bool, std::string, bool>(c.sign() < 0, abs(c).str(), abs(c) == Rat(1));
  });
}

std::string to_text(const QPoly& p) {
  return poly_text(p, [](const Quad& c) {
    if (c.b().is_zero())
      return std::tuple<bool, std::string, bool>(c.a().sign() < 0, abs(c.a()).str(),
                                                 abs(c.a()) == Rat(1));
    return std::tuple<bool, std::string, bool>(false, "(" + c.str() + ")", false);
  });
}

RPoly primitive_part(const RPoly& p) {
  if (p.is_zero()) return p;
  Int L = 1, G = 0;
  for (const auto& [e, c] : p.terms()) L = lcm(L, c.den());
  for (const auto& [e, c] : p.terms()) G = gcd(G, Int(c.num() * (L / c.den())));
  Rat s = Rat(L) / Rat(G);
  if (p.lc().sign() < 0) s = -s;
  return p.scaled(s);
}

std::string canonical_text(const RPoly& p) { return to_text(primitive_part(p)); }

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& t, const Roster& r) : text_(t), roster_(r) {}

  RPoly parse() {
    RPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RPoly expr() {
    RPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RPoly term() {
    RPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        RPoly d = unary();
        if (d.degree() > 0 || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(Rat(1) / d.lc());
      } else {
        return acc;
      }
    }
  }

  RPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RPoly power() {
    RPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return rpoly_const(roster_, Rat(parse_int(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (std::find(roster_.begin(), roster_.end(), name) == roster_.end())
        fail("unknown variable '" + name + "'");
      return rpoly_var(roster_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  const Roster& roster_;
  std::size_t pos_ = 0;
};

}  // namespace

RPoly parse_poly(const std::string& text, const Roster& roster) {
  return PolyParser(text, roster).parse();
}

QPoly embed(const RPoly& p, long d) {
  QPoly q(p.roster(), Quad(Rat(0), Rat(0), d));
  for (const auto& [e, c] : p.terms()) q.add_term(e, Quad(c, Rat(0), d));
  return q;
}

namespace {

void require_univariate(const QPoly& p) {
  if (p.nvars() != 1) throw PreconditionError("univariate polynomial expected");
}

}  // namespace

QPoly upoly_rem(const QPoly& a, const QPoly& b) {
  require_univariate(a);
  require_univariate(b);
  if (b.is_zero()) throw PreconditionError("remainder by zero polynomial");
  QPoly r = a;
  const unsigned db = b.lm()[0];
  while (!r.is_zero() && r.lm()[0] >= db) {
    Exponent m{r.lm()[0] - db};
    r -= b.mul_term(m, r.lc() / b.lc());
  }
  return r;
}

QPoly upoly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = upoly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(x.one_like() / x.lc());
}

std::optional<unsigned> upoly_order(const QPoly& p) {
  require_univariate(p);
  if (p.is_zero()) return std::nullopt;
  return p.terms().rbegin()->first[0];
}

bool rpoly_univariate_divides(const RPoly& divisor, const RPoly& f) {
  if (divisor.nvars() != 1 || f.nvars() != 1) throw PreconditionError("univariate polynomial expected");
  return upoly_rem(embed(f, -1), embed(divisor, -1)).is_zero();
}

}  // namespace ids
