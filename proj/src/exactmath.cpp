#include "ids/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ids {

Int parse_int(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty() || s == "-") throw ParseError("empty integer literal");
  for (size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer literal '" + std::string(text) + "'");
  }
  return Int(s, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_mpq(const mpq_class& q) {
  Rat r;
  r.v_ = q;
  r.v_.canonicalize();
  return r;
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational literal with zero denominator");
  return Rat(parse_int(text.substr(0, slash)), den);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PreconditionError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, unsigned e) {
  Rat out(1);
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

Quad::Quad(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 0 || !is_squarefree(Int(d < 0 ? -d : d)))
    throw PreconditionError("quadratic discriminant must be squarefree and nonzero, got " +
                            std::to_string(d));
}

void Quad::require_same(const Quad& o) const {
  if (d_ != o.d_)
    throw PreconditionError("mixed quadratic discriminants " + std::to_string(d_) + " and " +
                            std::to_string(o.d_));
}

Quad& Quad::operator+=(const Quad& o) {
  require_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  require_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  require_same(o);
  Rat na = a_ * o.a_ + Rat(d_) * b_ * o.b_;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  require_same(o);
  Rat n = o.norm();
  if (n.is_zero()) throw PreconditionError("division by zero in Q(sqrt d)");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

Quad& Quad::operator*=(const Rat& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

std::complex<double> Quad::to_complex() const {
  std::complex<double> root =
      d_ > 0 ? std::complex<double>(std::sqrt(double(d_)), 0.0)
             : std::complex<double>(0.0, std::sqrt(double(-d_)));
  return std::complex<double>(a_.to_double(), 0.0) + b_.to_double() * root;
}

std::string Quad::str() const {
  std::ostringstream os;
  if (b_.is_zero()) {
    os << a_;
    return os.str();
  }
  if (!a_.is_zero()) os << a_ << (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) os << "-";
  Rat mag = b_.sign() < 0 ? -b_ : b_;
  if (mag != Rat(1)) os << mag << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.str(); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

constexpr unsigned long kTrialBound = 1u << 16;

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          Int diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = x - ys;
        if (diff < 0) diff = -diff;
        g = gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

Factorization factorize(const Int& n) {
  if (n < 1) throw PreconditionError("factorize requires n >= 1");
  std::map<Int, unsigned> acc;
  Int rest = n;
  for (unsigned long p = 2; p < kTrialBound && Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++acc[Int(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest > 1) factor_into(rest, acc);
  Factorization f;
  for (auto& [p, e] : acc) f.push_back({p, e});
  return f;
}

Int expand(const Factorization& f) {
  Int v = 1;
  for (const auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

SquarefreeDecomp squarefree_decomp(const Int& n) {
  if (n < 1) throw PreconditionError("squarefree_decomp requires n >= 1");
  SquarefreeDecomp out{1, 1};
  for (const auto& pp : factorize(n)) {
    for (unsigned i = 0; i < pp.exponent / 2; ++i) out.square *= pp.prime;
    if (pp.exponent % 2) out.squarefree *= pp.prime;
  }
  return out;
}

bool is_squarefree(const Int& n) {
  if (n < 1) return false;
  for (const auto& pp : factorize(n))
    if (pp.exponent > 1) return false;
  return true;
}

Int tau(const Int& n) {
  Int t = 1;
  for (const auto& pp : factorize(n)) t *= pp.exponent + 1;
  return t;
}

int legendre(const Int& a, const Int& p) {
  if (p <= 2 || !is_prime(p)) throw PreconditionError("legendre requires an odd prime modulus");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = (p - 1) / 2, out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1 ? 1 : -1;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (n < 0) throw PreconditionError("is_perfect_square requires n >= 0");
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = is_perfect_square(r.num());
  if (!n) return std::nullopt;
  auto d = is_perfect_square(r.den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

Int count_representations(const Int& D, const Int& M) {
  if (D < 1 || M < 1) throw PreconditionError("count_representations requires D, M >= 1");
  Int count = 0;
  for (Int y = 0; D * y * y <= M; ++y) {
    auto x = is_perfect_square(Int(M - D * y * y));
    if (!x) continue;
    int sx = (*x == 0) ? 1 : 2;
    int sy = (y == 0) ? 1 : 2;
    count += sx * sy;
  }
  return count;
}

namespace {

Int mod_pos(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

// Square root of a mod odd prime p, a a nonzero residue.
Int tonelli_shanks(const Int& a, const Int& p) {
  Int q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  auto powm = [&](const Int& b, const Int& e) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  if (s == 1) return powm(a, Int((p + 1) / 4));
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int c = powm(z, q), r = powm(a, Int((q + 1) / 2)), t = powm(a, q);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod_pos(Int(tt * tt), p);
      ++i;
    }
    Int b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mod_pos(Int(b * b), p);
    r = mod_pos(Int(r * b), p);
    c = mod_pos(Int(b * b), p);
    t = mod_pos(Int(t * c), p);
    m = i;
  }
  return r;
}

std::vector<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
  std::vector<Int> roots;
  Int pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  Int ar = mod_pos(a, p);
  if (p != 2 && ar != 0) {
    if (legendre(ar, p) != 1) return {};
    Int r = tonelli_shanks(ar, p);
    Int mod = p;
    for (unsigned i = 1; i < e; ++i) {
      mod *= p;
      Int fr = r * r - a;
      Int inv, twor = mod_pos(Int(2 * r), mod);
      mpz_invert(inv.get_mpz_t(), twor.get_mpz_t(), mod.get_mpz_t());
      r = mod_pos(Int(r - fr * inv), mod);
    }
    roots = {r, mod_pos(Int(-r), pe)};
  } else {
    // p divides 2a: lift every root one digit at a time.
    std::vector<Int> cur;
    for (Int r = 0; r < p; ++r)
      if (mod_pos(Int(r * r - a), p) == 0) cur.push_back(r);
    Int mod = p;
    for (unsigned i = 1; i < e; ++i) {
      Int next_mod = mod * p;
      std::vector<Int> next;
      for (const auto& r : cur)
        for (Int t = 0; t < p; ++t) {
          Int cand = r + t * mod;
          if (mod_pos(Int(cand * cand - a), next_mod) == 0) next.push_back(cand);
        }
      cur = std::move(next);
      mod = next_mod;
    }
    roots = std::move(cur);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<Int> sqrt_mod(const Int& a, const Int& n) {
  if (n < 1) throw PreconditionError("sqrt_mod requires n >= 1");
  if (n == 1) return {Int(0)};
  std::vector<Int> roots{Int(0)};
  Int mod = 1;
  for (const auto& pp : factorize(n)) {
    Int pe = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) pe *= pp.prime;
    auto local = sqrt_mod_prime_power(a, pp.prime, pp.exponent);
    if (local.empty()) return {};
    // CRT combine with the roots collected so far.
    Int inv;
    Int mod_red = mod_pos(mod, pe);
    mpz_invert(inv.get_mpz_t(), mod_red.get_mpz_t(), pe.get_mpz_t());
    std::vector<Int> next;
    for (const auto& r : roots)
      for (const auto& s : local) {
        Int t = mod_pos(Int((s - r) * inv), pe);
        next.push_back(r + mod * t);
      }
    mod *= pe;
    roots = std::move(next);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Number of primitive solutions (gcd(x, y) = 1) of x^2 + D y^2 = n. Each
// square root r of -D modulo n belongs to a form class, and the descent
// started from r succeeds exactly when that class is principal; a principal
// class carries one solution per unit of the order.
Int primitive_count(const Int& D, const Int& n) {
  const int units = (D == 1) ? 4 : 2;
  if (n == 1) return units;
  Int found = 0;
  for (const auto& r0 : sqrt_mod(Int(-D), n)) {
    Int a = n, b = r0;
    while (b * b >= n) {
      Int t = a % b;
      a = b;
      b = t;
    }
    Int rest = n - b * b;
    if (rest % D != 0) continue;
    auto y = is_perfect_square(Int(rest / D));
    if (!y || *y == 0 || gcd(b, *y) != 1) continue;
    // Replacing x by -x if needed, the solution must satisfy x = r y (mod n).
    if (mod_pos(Int(b - r0 * *y), n) != 0 && mod_pos(Int(b + r0 * *y), n) != 0) continue;
    ++found;
  }
  return found * units;
}

}  // namespace

Int count_representations_cornacchia(const Int& D, const Int& M) {
  if (D < 1 || M < 1) throw PreconditionError("count_representations requires D, M >= 1");
  std::vector<Int> squares{Int(1)};
  for (const auto& pp : factorize(M)) {
    std::vector<Int> next;
    for (const auto& s : squares) {
      Int v = s;
      for (unsigned k = 0; 2 * k <= pp.exponent; ++k) {
        next.push_back(v);
        v *= pp.prime * pp.prime;
      }
    }
    squares = std::move(next);
  }
  Int total = 0;
  for (const auto& g2 : squares) total += primitive_count(D, Int(M / g2));
  return total;
}

}  // namespace ids
