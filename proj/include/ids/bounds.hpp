#pragma once

// Finite ingredients of the line and circle counting bounds: the divisor
// audit for collinear points seen from an apex, canonical circle radii
// n / (2 sqrt D) with the flip reduction, the Legendre splitting of n and
// the lattice-point capacity of a circle, and the large-radius test.

#include <optional>
#include <string>
#include <vector>

#include "ids/geom.hpp"

namespace ids {

struct LineAuditReport {
  Int a;                   // x_K - x_1
  std::vector<Int> b;      // apex distances
  Int D;                   // 2a / gcd(b_1^2 - b_K^2 + a^2, 2a)
  Rat q1_minus_m1;         // (b_1^2 - b_K^2 + a^2) / (2a)
  Int target;              // D^2 * (apex height)^2
  Int tau_target;
  std::size_t K = 0;
  std::vector<Int> factors;  // D b_i + D (q_1 - m_i), one per line point
  std::size_t distinct_divisors = 0;
  bool identity_checked = false;
};

// Line points are (x_i, 0) for increasing x_i; apex = (q_1, t sqrt m).
LineAuditReport audit_collinear(const std::vector<Rat>& line_xs, const NormalizedPoint& apex,
                                long m);

struct CanonicalRadius {
  Int n;
  Int D;
  friend bool operator==(const CanonicalRadius&, const CanonicalRadius&) = default;
};

// The radius ell_before / (2 sqrt D) equals ell_after sqrt(D1) / (2 sqrt D2)
// with ell_after = ell_before / D1, and one application of
// c(l sqrt(D1) / (2 sqrt D2)) <= c(l / (2 sqrt(D1 D2))) moves it to
// ell_after / (2 sqrt D).
struct FlipStep {
  Int ell_before;
  Int D1;
  Int D2;
  Int ell_after;
};

struct RadiusTrace {
  Rat R2;        // squared circumradius
  Int l1, l2;    // R = l1 / (l2 sqrt D)
  Int D;
  Int dilation;  // the circle is scaled by this factor
  Int l3;        // dilation * R = l3 / (2 sqrt D)
  std::vector<FlipStep> flips;
  CanonicalRadius result;
  std::vector<std::string> inequalities;
};

RadiusTrace canonical_radius(const Int& d1, const Int& d2, const Int& d3);

struct FlipResult {
  PointSet flipped;
  Rat radius2_before;
  Rat radius2_after;
  std::vector<Int> chords_before;
  std::vector<Int> chords_after;
};

// S lies on a circle of radius k sqrt(m1) / (2 sqrt m2). Every chord must be
// divisible by m1; the set scaled by 1/m1 is certified on the flipped circle.
FlipResult flip_witness(const PointSet& s, const Int& k, const Int& m1, const Int& m2);

struct LegendreSplit {
  Int n1;
  Int n2;
};

LegendreSplit split_by_legendre(const Int& n, const Int& D);

struct CircleBoundReport {
  CanonicalRadius canonical;
  Int n1;
  Int n2;
  Int capacity;
};

CircleBoundReport circle_capacity(const CanonicalRadius& cr);

enum class LargeRadiusVerdict { AtMostTwoConfirmed, SmallRadiusRegime, Contradiction };

std::string to_string(LargeRadiusVerdict v);

struct Circle {
  NormalizedPoint center;
  Rat r2;
};

struct LargeRadiusReport {
  LargeRadiusVerdict verdict = LargeRadiusVerdict::SmallRadiusRegime;
  Rat r2;
  Int N;
  // r^2 above this forces |S| <= 2 for every integer distance set in the box.
  Int universal_threshold;
  // When |S| >= 3: 2 N^2 / (1 - cos^2 theta_S) for the minimal angle of S.
  std::optional<Rat> set_threshold;
  std::vector<std::string> chain;
};

// Without an explicit circle, the circumcircle of the first non-collinear
// triple is used.
LargeRadiusReport large_radius_check(const PointSet& s, const Int& N,
                                     const std::optional<Circle>& circle = std::nullopt);

// Circumcircle of three non-collinear normalized points.
Circle circumcircle(const NormalizedPoint& p1, const NormalizedPoint& p2,
                    const NormalizedPoint& p3, long m);

}  // namespace ids
