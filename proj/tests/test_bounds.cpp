#include <random>

#include "doctest.h"
#include "ids/bounds.hpp"
#include "ids/construct.hpp"

using namespace ids;

namespace {

LineAuditReport audit_apex(long h) {
  auto s = collinear_plus_apex(h);
  std::vector<Rat> xs;
  for (std::size_t i = 1; i < s.size(); ++i) xs.push_back(s.points[i].x);
  return audit_collinear(xs, s.points[0], s.m);
}

PointSet equilateral3() {
  PointSet s;
  s.m = 3;
  s.points = {{0, 0}, {3, 0}, {Rat(Int(3), Int(2)), Rat(Int(3), Int(2))}};
  return s;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("audit on the h = 4 apex set") {
    auto r = audit_apex(4);
    CHECK(r.a == 6);
    CHECK(r.K == 3);
    CHECK(r.b.front() == 5);
    CHECK(r.b.back() == 5);
    CHECK(r.q1_minus_m1 == Rat(3));
    CHECK(r.D == 1);
    CHECK(r.target == 16);
    CHECK(r.identity_checked);
    // The factors D b_i + D (q1 - m_i) for m_i = -3, 0, 3.
    CHECK(r.factors == std::vector<Int>{8, 4, 2});
    for (const auto& f : r.factors) CHECK(r.target % f == 0);
  }

  TEST_CASE("audit on the h = 12 apex set") {
    auto r = audit_apex(12);
    CHECK(r.K == 9);
    CHECK(r.identity_checked);
    CHECK(Int(r.K) <= r.tau_target);
    CHECK(r.K <= r.distinct_divisors);
    CHECK(r.tau_target == tau(r.target));
  }

  TEST_CASE("audit degenerate and invalid inputs") {
    auto r = audit_collinear({Rat(0), Rat(3)}, {Rat(0), Rat(4)}, 1);
    CHECK(r.K == 2);
    CHECK(r.identity_checked);
    CHECK_THROWS_AS(audit_collinear({Rat(0), Rat(3)}, {Rat(1), Rat(0)}, 1), DomainError);
    CHECK_THROWS_AS(audit_collinear({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, 1), DomainError);
  }

  TEST_CASE("audit identity for h up to 60") {
    for (long h = 2; h <= 60; ++h) {
      if (collinear_plus_apex(h).size() < 3) continue;
      auto r = audit_apex(h);
      CHECK(r.identity_checked);
      CHECK(Int(r.K) <= r.tau_target);
    }
  }

  TEST_CASE("canonical radius examples") {
    CHECK(canonical_radius(3, 4, 5).result == CanonicalRadius{5, 1});
    CHECK(canonical_radius(1, 1, 1).result == CanonicalRadius{2, 3});
    CHECK(canonical_radius(39, 25, 16).result == CanonicalRadius{65, 1});
    CHECK_THROWS_AS(canonical_radius(1, 2, 3), DomainError);
  }

  TEST_CASE("canonical radius on random triangles") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> side(1, 60);
    int checked = 0;
    while (checked < 10000) {
      long a = side(rng), b = side(rng), c = side(rng);
      if (a + b <= c || a + c <= b || b + c <= a) continue;
      auto t = canonical_radius(a, b, c);
      CHECK(gcd(t.result.n, t.result.D) == 1);
      CHECK(is_squarefree(t.result.D));
      CHECK(t.R2 == circumradius2(a, b, c));
      // Undo the dilation and the flips.
      Int ell = t.result.n;
      for (auto it = t.flips.rbegin(); it != t.flips.rend(); ++it) {
        CHECK(it->ell_after == ell);
        ell = it->ell_before;
      }
      CHECK(ell == t.l3);
      Rat lam(t.dilation);
      CHECK(Rat(Int(t.l3 * t.l3), Int(4 * t.D)) == t.R2 * lam * lam);
      ++checked;
    }
  }

  TEST_CASE("legendre split examples") {
    auto a = split_by_legendre(15, 1);
    CHECK(a.n1 == 3);
    CHECK(a.n2 == 5);
    auto b = split_by_legendre(1, 7);
    CHECK(b.n1 == 1);
    CHECK(b.n2 == 1);
    auto c = split_by_legendre(2, 3);
    CHECK(c.n1 == 1);
    CHECK(c.n2 == 2);
    CHECK_THROWS_AS(split_by_legendre(6, 3), DomainError);
  }

  TEST_CASE("legendre split conditions for n <= 10^4, D <= 50") {
    bool ok = true;
    for (long D = 1; D <= 50 && ok; ++D) {
      if (!is_squarefree(D)) continue;
      for (long n = 1; n <= 10000 && ok; ++n) {
        if (gcd(Int(n), Int(D)) != 1) continue;
        auto s = split_by_legendre(n, D);
        ok = s.n1 * s.n2 == n;
        for (const auto& pp : factorize(s.n1)) ok = ok && pp.prime != 2 && legendre(-D, pp.prime) == -1;
        for (const auto& pp : factorize(s.n2))
          ok = ok && (pp.prime == 2 || legendre(-D, pp.prime) == 1);
        if (!ok) MESSAGE("n=" << n << " D=" << D);
      }
    }
    CHECK(ok);
  }

  TEST_CASE("circle capacity examples") {
    auto a = circle_capacity({5, 1});
    CHECK(a.n2 == 5);
    CHECK(a.capacity == 12);
    auto b = circle_capacity({2, 3});
    CHECK(b.n2 == 2);
    CHECK(b.capacity == 6);
    auto c = circle_capacity({3, 1});
    CHECK(c.n2 == 1);
    CHECK(c.capacity == 4);
  }

  TEST_CASE("flip examples") {
    PointSet tri;
    tri.m = 1;
    tri.points = {{0, 0}, {3, 0}, {0, 4}};
    auto id = flip_witness(tri, 5, 1, 1);
    CHECK(id.chords_after == id.chords_before);

    auto r = flip_witness(equilateral3(), 2, 3, 1);
    CHECK(r.chords_before == std::vector<Int>{3, 3, 3});
    CHECK(r.chords_after == std::vector<Int>{1, 1, 1});
    CHECK(r.radius2_before == Rat(3));
    CHECK(r.radius2_after == Rat(Int(1), Int(3)));

    PointSet two;
    two.m = 1;
    two.points = {{0, 0}, {3, 0}};
    CHECK_THROWS_AS(flip_witness(two, 3, 1, 1), PreconditionError);
    CHECK_THROWS_AS(flip_witness(equilateral3(), 2, 3, 3), PreconditionError);
  }

  TEST_CASE("large radius verdicts") {
    PointSet two;
    two.m = 1;
    two.points = {{0, 0}, {10, 0}};
    Circle huge{{Rat(5), Rat(1000000)}, Rat(25) + Rat(Int("1000000000000"))};
    auto a = large_radius_check(two, 10, huge);
    CHECK(a.verdict == LargeRadiusVerdict::AtMostTwoConfirmed);
    CHECK(a.universal_threshold == 512000000);

    PointSet eq;
    eq.m = 3;
    eq.points = {{0, 0}, {2, 0}, {1, 1}};
    auto b = large_radius_check(eq, 10);
    CHECK(b.verdict == LargeRadiusVerdict::SmallRadiusRegime);
    CHECK(b.set_threshold.has_value());

    auto c = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}}).set;
    CHECK(large_radius_check(c, 100).verdict == LargeRadiusVerdict::SmallRadiusRegime);
    Circle wrong{{Rat(0), Rat(0)}, Rat(7)};
    CHECK_THROWS_AS(large_radius_check(two, 10, wrong), DomainError);
  }
}
