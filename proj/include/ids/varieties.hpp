#pragma once

// The varieties X_k and C_k attached to a point configuration, their
// Groebner check, the fiber over the origin, singular loci, the R
// polynomials of a plane curve, admissible point selection, rational
// curve fitting and numeric monodromy of the sheets d_j.
//
// Points P_j = (a_j, b_j) are given in normalized coordinates (x, t) and the
// generators are Q_{m,P}(x, y, d) = (x - a)^2 + m (y - b)^2 - d^2.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ids/geom.hpp"
#include "ids/poly.hpp"

namespace ids {

// Roster (d1, ..., dk, x, y).
Roster xk_roster(std::size_t k);
// Roster (x, y) of plane curves.
Roster curve_roster();

struct IdealBasis {
  std::vector<RPoly> gens;
  long m = 1;
  std::vector<NormalizedPoint> points;
  std::optional<RPoly> curve;  // plane curve in (x, y) for C_k
};

RPoly q_generator(const Roster& r, std::size_t j, const NormalizedPoint& p, long m);

IdealBasis build_Xk(long m, const std::vector<NormalizedPoint>& points);

// Renames p into the roster `to` by matching variable names.
RPoly remap(const RPoly& p, const Roster& to);

struct CkBasis {
  IdealBasis basis;
  std::optional<std::size_t> origin_fiber_count;  // 2^k when Q(0,0) = 0
  Int bezout_ceiling;                             // deg Q * 2^k
};

CkBasis build_Ck(const RPoly& curve, long m, const std::vector<NormalizedPoint>& points);

struct BuchbergerFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  RPoly s;
  RPoly remainder;
};

struct BuchbergerResult {
  bool groebner = true;
  std::size_t pairs_checked = 0;
  std::optional<BuchbergerFailure> witness;
};

BuchbergerResult buchberger_check(const std::vector<RPoly>& gens);
inline BuchbergerResult buchberger_check(const IdealBasis& b) { return buchberger_check(b.gens); }

// Finite Q-linear combination of square roots of positive squarefree
// integers. Distinct radicals are linearly independent, so the zero test is
// exact.
class SqrtExpr {
 public:
  SqrtExpr() = default;
  SqrtExpr(const Rat& r);  // NOLINT(google-explicit-constructor)
  static SqrtExpr sqrt_of(const Rat& r);  // r >= 0

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // The radicand when every term shares one of them.
  std::optional<Int> single_radical() const;
  Rat coefficient(const Int& radical) const;
  double to_double() const;
  std::string str() const;
  const std::map<Int, Rat>& terms() const { return terms_; }

  SqrtExpr& operator+=(const SqrtExpr& o);
  SqrtExpr operator-() const;
  friend SqrtExpr operator+(SqrtExpr a, const SqrtExpr& b) { return a += b; }
  friend SqrtExpr operator-(SqrtExpr a, const SqrtExpr& b) { return a += -b; }
  friend SqrtExpr operator*(const SqrtExpr& a, const SqrtExpr& b);
  friend bool operator==(const SqrtExpr& a, const SqrtExpr& b) { return a.terms_ == b.terms_; }

 private:
  void add(const Int& radical, const Rat& c);
  std::map<Int, Rat> terms_;
};

// A point of X_k or C_k with rational (x, y) and d_j = signs[j] sqrt(radicands[j]).
struct HybridPoint {
  Rat x;
  Rat y;
  std::vector<Rat> radicands;
  std::vector<int> signs;

  std::vector<SqrtExpr> coords() const;  // roster order (d1, ..., dk, x, y)
  std::vector<std::complex<double>> numeric() const;
  std::string str() const;
};

// Height of a projective point with rational coordinates: the largest
// absolute value after scaling to coprime integers.
Int height(const std::vector<Rat>& coords);

struct OriginFiber {
  std::vector<Rat> radicands;
  std::vector<HybridPoint> points;
  std::size_t count = 0;
};

// Throws DomainError for C_k when the curve misses the origin.
OriginFiber fiber_over_origin(const IdealBasis& b);

struct JacobianResult {
  std::vector<std::vector<std::complex<double>>> numeric;
  std::vector<std::vector<SqrtExpr>> exact;  // empty for numeric input
  std::size_t rank = 0;
  bool rank_exact = false;
};

bool on_variety(const IdealBasis& b, const HybridPoint& p);

JacobianResult jacobian(const IdealBasis& b, const HybridPoint& p);
JacobianResult jacobian(const IdealBasis& b, const std::vector<std::complex<double>>& p,
                        double tol = 1e-9);

std::vector<HybridPoint> singular_points_Xk(const IdealBasis& b);

// R_{j,+} (evaluated at x = -i sqrt m) and R_{j,-} (at x = +i sqrt m) as
// polynomials in w over Q(sqrt(-m)), j = 0..d.
struct RPolys {
  long m = 1;
  int degree = 0;
  std::vector<QPoly> plus;
  std::vector<QPoly> minus;
};

RPolys r_polys(const RPoly& curve, long m);
// Re-derives every R_{j,+-} by expanding the homogenized curve at
// (-+ i sqrt m + w z, 1, z) and compares.
bool verify_r_identity(const RPoly& curve, long m, const RPolys& r);
// First (j, sign) with j <= d - 2 and R_{j,sign} nonzero.
std::optional<std::pair<int, int>> r_nonvanishing_witness(const RPolys& r);
// Whether (x^2 + m)^{d-1} divides the top form evaluated at y = 1.
bool top_form_divisible(const RPoly& curve, long m);

// Orders of vanishing at 0 of the curve restricted to the two lines through
// P and, after homogenizing, along the two tangent-direction parametrizations.
struct IntersectionOrders {
  std::optional<unsigned> n1, n1p, n2, n2p;
};

IntersectionOrders intersection_orders(const RPoly& curve, long m, const NormalizedPoint& p);

// The point where the line through P_j with direction (-i sqrt m, 1) meets
// the conjugate-direction line through P_j', as (x, y) over Q(sqrt(-m)).
std::pair<Quad, Quad> midpoint_conjugate(const NormalizedPoint& pj, const NormalizedPoint& pjp,
                                         long m);

enum class SelectMode { OnCurve, OffCurve };

struct SelectionReport {
  bool sufficient = false;
  std::vector<std::size_t> selected;
  std::uint64_t threshold = 0;
  std::size_t eligible = 0;
  std::string reason;
};

std::uint64_t selection_threshold(std::size_t k, int degree, SelectMode mode);

SelectionReport admissible_select(const RPoly& curve, const PointSet& candidates, std::size_t k,
                                  SelectMode mode);

// Re-checks the selection conditions on a chosen subset; returns an empty
// string when they all hold, otherwise a description of the first failure.
std::string check_selection(const RPoly& curve, const PointSet& candidates,
                            const std::vector<std::size_t>& chosen, SelectMode mode);

// Throws PreconditionError for fewer than d^2 + 1 or repeated points.
std::optional<RPoly> fit_rational_curve(const std::vector<std::pair<Rat, Rat>>& points, int d);

using Loop = std::vector<std::complex<double>>;

// z_j = (a_j + i sqrt(m) b_j) / 2.
std::vector<std::complex<double>> branch_points(long m, const std::vector<NormalizedPoint>& pts);

std::vector<int> winding_numbers(const Loop& loop, const std::vector<std::complex<double>>& centers);

// A closed loop based at 0 that winds windings[j] times around z_j, built
// from lassos; `circle_samples` controls the discretization.
Loop lasso_loop(long m, const std::vector<NormalizedPoint>& pts, const std::vector<int>& windings,
                std::size_t circle_samples = 96, double bend = 0.0);

// Continues each sheet d_j along the loop and returns sign(d_j(1) / d_j(0)).
// Throws DomainError if the loop comes within tol of a branch point or the
// endpoint does not snap to a square root.
std::vector<int> monodromy_signs(long m, const std::vector<NormalizedPoint>& pts, const Loop& loop,
                                 double tol = 1e-9);

// Distinct nonzero points with numerators and denominators drawn from the
// seeded generator.
std::vector<NormalizedPoint> random_points(std::uint64_t seed, std::size_t k, long range = 20);

}  // namespace ids
