#pragma once

// Exact arithmetic: arbitrary-precision integers and rationals, elements of
// a quadratic extension Q(sqrt d), and the elementary number theory used by
// the counting bounds (factorization, divisor counts, Legendre symbols,
// representation counts for x^2 + D y^2).

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ids/errors.hpp"

namespace ids {

using Int = mpz_class;

Int parse_int(std::string_view text);
std::string to_string(const Int& v);

// Rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  template <class U>
  Rat(const __gmp_expr<mpz_t, U>& e) : v_(mpz_class(e)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  static Rat from_mpq(const mpq_class& q);

  // Accepts "p", "-p" or "p/q".
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rat operator-() const { return from_mpq(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);
Rat abs(const Rat& r);
Rat pow(const Rat& r, unsigned e);

// a + b*sqrt(d) with d a squarefree nonzero integer. Arithmetic between
// values with different d is rejected, never coerced.
class Quad {
 public:
  Quad(Rat a, Rat b, long d);
  static Quad rational(const Rat& a, long d) { return Quad(a, Rat(0), d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
  Quad conj() const { return Quad(a_, -b_, d_, Unchecked{}); }
  std::complex<double> to_complex() const;
  std::string str() const;

  Quad operator-() const { return Quad(-a_, -b_, d_, Unchecked{}); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);
  Quad& operator*=(const Rat& r);

  friend Quad operator+(Quad a, const Quad& b) { return a += b; }
  friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
  friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
  friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
  friend Quad operator*(Quad a, const Rat& r) { return a *= r; }
  friend Quad operator*(const Rat& r, Quad a) { return a *= r; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  struct Unchecked {};
  Quad(Rat a, Rat b, long d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  void require_same(const Quad& o) const;

  Rat a_;
  Rat b_;
  long d_;
};

std::ostream& operator<<(std::ostream& os, const Quad& q);

struct PrimePower {
  Int prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization in increasing prime order.
using Factorization = std::vector<PrimePower>;

Factorization factorize(const Int& n);
Int expand(const Factorization& f);
bool is_prime(const Int& n);

// n = square^2 * squarefree with squarefree squarefree.
struct SquarefreeDecomp {
  Int square;
  Int squarefree;
};
SquarefreeDecomp squarefree_decomp(const Int& n);
bool is_squarefree(const Int& n);

Int tau(const Int& n);

// Legendre symbol (a/p); p must be an odd prime.
int legendre(const Int& a, const Int& p);

std::optional<Int> is_perfect_square(const Int& n);

// Rational square root when r is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& r);

// #{(x, y) in Z^2 : x^2 + D y^2 = M}, by direct enumeration over |y|.
Int count_representations(const Int& D, const Int& M);

// Same count through Cornacchia's descent: for every square divisor g^2 of
// M, primitive solutions of x^2 + D y^2 = M/g^2 are found from the square
// roots of -D modulo M/g^2.
Int count_representations_cornacchia(const Int& D, const Int& M);

// All r in [0, n) with r^2 = a (mod n).
std::vector<Int> sqrt_mod(const Int& a, const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace ids
