#include <random>
#include <set>

#include "doctest.h"
#include "ids/varieties.hpp"

using namespace ids;

namespace {

RPoly xy(const std::string& text) { return parse_poly(text, curve_roster()); }

// A point of X_k above the rational (x, y), all sheets positive.
HybridPoint lift(const IdealBasis& b, const Rat& x, const Rat& y) {
  HybridPoint h{x, y, {}, {}};
  for (const auto& p : b.points) {
    h.radicands.push_back((x - p.x) * (x - p.x) + Rat(b.m) * (y - p.t) * (y - p.t));
    h.signs.push_back(1);
  }
  return h;
}

Rat rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-30, 30), d(1, 5);
  return Rat(Int(n(rng)), Int(d(rng)));
}

RPoly random_curve(std::mt19937_64& rng, int d) {
  RPoly q = rpoly_zero(curve_roster());
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      long v = c(rng);
      if (i + j == d && i == 0 && v == 0) v = 1;
      if (v != 0) q.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, Rat(v));
    }
  return q;
}

}  // namespace

TEST_SUITE("varieties") {
  TEST_CASE("building X_k") {
    auto b = build_Xk(1, {{1, 0}});
    REQUIRE(b.gens.size() == 1);
    CHECK(b.gens[0] == parse_poly("(x-1)^2 + y^2 - d1^2", xk_roster(1)));
    CHECK_THROWS_AS(build_Xk(1, {{1, 0}, {0, 0}}), DomainError);
    CHECK_THROWS_AS(build_Xk(1, {{1, 0}, {1, 0}}), DomainError);
    auto b3 = build_Xk(2, {{1, 0}, {0, 1}, {2, 3}});
    CHECK(b3.gens.size() == 3);
    for (const auto& g : b3.gens) CHECK(g.nvars() == 5);
  }

  TEST_CASE("Groebner property of the X_k generators") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::size_t k = 2 + seed % 5;
      long m = static_cast<long>(1 + (seed * 7) % 30);
      if (!is_squarefree(m)) m = 2;
      auto b = build_Xk(m, random_points(seed, k));
      auto r = buchberger_check(b);
      CHECK(r.groebner);
      CHECK(r.pairs_checked == k * (k - 1) / 2);
    }
    CHECK(buchberger_check(build_Xk(3, {{1, 1}})).groebner);
  }

  TEST_CASE("fiber over the origin") {
    auto f1 = fiber_over_origin(build_Xk(1, {{1, 0}}));
    CHECK(f1.count == 2);
    CHECK(f1.radicands == std::vector<Rat>{Rat(1)});
    std::set<int> signs;
    for (const auto& p : f1.points) signs.insert(p.signs[0]);
    CHECK(signs == std::set<int>{-1, 1});
    for (std::size_t k = 1; k <= 8; ++k) {
      auto b = build_Xk(5, random_points(100 + k, k));
      auto f = fiber_over_origin(b);
      CHECK(f.count == (std::size_t{1} << k));
      for (const auto& p : f.points) CHECK(on_variety(b, p));
    }
  }

  TEST_CASE("singular points of X_k") {
    auto s1 = singular_points_Xk(build_Xk(1, {{1, 0}}));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].x == Rat(1));
    CHECK(s1[0].y == Rat(0));
    CHECK(s1[0].radicands[0] == Rat(0));
    CHECK(singular_points_Xk(build_Xk(1, {{1, 0}, {0, 1}})).size() == 4);
    auto b5 = build_Xk(7, random_points(9, 5));
    auto s5 = singular_points_Xk(b5);
    CHECK(s5.size() == 80);
    for (const auto& p : s5) {
      bool at_point = false;
      for (const auto& q : b5.points) at_point = at_point || (p.x == q.x && p.y == q.t);
      CHECK(at_point);
      CHECK(jacobian(b5, p).rank < 5);
    }
  }

  TEST_CASE("Jacobian ranks") {
    auto b = build_Xk(3, {{1, 0}, {2, 1}, {-1, 2}});
    auto p = lift(b, Rat(5), Rat(7));
    auto j = jacobian(b, p);
    CHECK(j.rank == 3);
    CHECK(j.rank_exact);
    auto q = p;
    q.signs = {-1, 1, -1};
    CHECK(jacobian(b, q).rank == j.rank);
    auto s = lift(b, Rat(2), Rat(1));
    CHECK(jacobian(b, s).rank < 3);
    auto off = p;
    off.radicands[0] += Rat(1);
    CHECK_THROWS_AS(jacobian(b, off), DomainError);
    auto num = p.numeric();
    CHECK(jacobian(b, num).rank == 3);
  }

  TEST_CASE("R polynomials") {
    std::mt19937_64 rng(77);
    for (int d = 1; d <= 6; ++d)
      for (int trial = 0; trial < 3; ++trial) {
        auto q = random_curve(rng, d);
        long m = 1 + static_cast<long>(trial) * 2;
        auto r = r_polys(q, m);
        CHECK(r.degree == d);
        CHECK(verify_r_identity(q, m, r));
        for (int jj = 0; jj <= d; ++jj) {
          CHECK(r.plus[jj].degree() <= jj);
          CHECK(r.minus[jj].degree() <= jj);
        }
        if (d >= 2 && !top_form_divisible(q, m)) CHECK(r_nonvanishing_witness(r).has_value());
      }
    CHECK(top_form_divisible(xy("x^2 + 2*y^2 + x"), 2));
    CHECK_FALSE(top_form_divisible(xy("x^2 + y^2 + x"), 2));
    CHECK_THROWS(r_polys(rpoly_zero(curve_roster()), 1));
  }

  TEST_CASE("building C_k") {
    auto a = build_Ck(xy("y - x^2"), 1, {{1, 1}});
    REQUIRE(a.origin_fiber_count.has_value());
    CHECK(*a.origin_fiber_count == 2);
    CHECK(a.basis.gens.size() == 2);
    CHECK(a.bezout_ceiling == 2 * 2);
    auto pts = random_points(4, 3);
    auto b = build_Ck(xy("y - x^3 + x"), 2, pts);
    CHECK(*b.origin_fiber_count == 8);
    CHECK(b.bezout_ceiling == 8 * 3);
    auto f = fiber_over_origin(b.basis);
    CHECK(f.count == 8);
    auto c = build_Ck(xy("y - x^2 - 1"), 1, {{1, 1}});
    CHECK_FALSE(c.origin_fiber_count.has_value());
    CHECK_THROWS_AS(fiber_over_origin(c.basis), DomainError);
  }

  TEST_CASE("isotropic line intersections") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
      long m = std::vector<long>{1, 2, 3, 5, 7}[i % 5];
      NormalizedPoint p{rnd(rng), rnd(rng)}, q{rnd(rng), rnd(rng)};
      if (p == q) continue;
      const Quad im(Rat(0), Rat(1), -m);
      auto lift_q = [&](const Rat& r) { return Quad(r, Rat(0), -m); };
      // l_P: x + i sqrt(m) y = a + i sqrt(m) b; l'_P uses the conjugate.
      auto [x, y] = midpoint_conjugate(p, q, m);
      CHECK(x + im * y == lift_q(p.x) + im * lift_q(p.t));
      CHECK(x - im * y == lift_q(q.x) - im * lift_q(q.t));
      CHECK(x == lift_q((p.x + q.x) / Rat(2)) + im * lift_q((p.t - q.t) / Rat(2)));
      // Self-intersection of the two lines through one point is the point.
      auto [px, py] = midpoint_conjugate(p, p, m);
      CHECK(px == lift_q(p.x));
      CHECK(py == lift_q(p.t));
      // Parallel lines through distinct points never meet: the constants differ.
      CHECK_FALSE(lift_q(p.x) + im * lift_q(p.t) == lift_q(q.x) + im * lift_q(q.t));
    }
  }

  TEST_CASE("admissible selection") {
    auto cubic = xy("y - x^3");
    CHECK(selection_threshold(3, 3, SelectMode::OnCurve) == 65);
    PointSet many;
    many.m = 2;
    for (long t = 1; t <= 80; ++t) many.points.push_back({Rat(t), Rat(t * t * t)});
    auto r = admissible_select(cubic, many, 3, SelectMode::OnCurve);
    CHECK(r.sufficient);
    CHECK(r.selected.size() == 3);
    CHECK(check_selection(cubic, many, r.selected, SelectMode::OnCurve).empty());

    PointSet few = many;
    few.points.resize(10);
    auto f = admissible_select(cubic, few, 3, SelectMode::OnCurve);
    CHECK_FALSE(f.sufficient);
    CHECK(f.threshold == 65);

    PointSet off;
    off.m = 2;
    off.points = {{2, 3}};
    CHECK_THROWS_AS(admissible_select(cubic, off, 3, SelectMode::OnCurve), DomainError);

    PointSet centre;
    centre.m = 1;
    centre.points = {{0, 0}};
    auto circ = xy("x^2 + y^2 - 1");
    auto c = admissible_select(circ, centre, 1, SelectMode::OffCurve);
    CHECK_FALSE(c.sufficient);
    CHECK_THROWS_AS(admissible_select(cubic, centre, 1, SelectMode::OffCurve), PreconditionError);
  }

  TEST_CASE("curve fitting") {
    std::vector<std::pair<Rat, Rat>> par;
    for (long t = -2; t <= 2; ++t) par.push_back({Rat(t), Rat(t * t)});
    auto a = fit_rational_curve(par, 2);
    REQUIRE(a.has_value());
    CHECK(primitive_part(*a) == primitive_part(xy("y - x^2")));

    std::vector<std::pair<Rat, Rat>> generic{{0, 1}, {2, 7}, {5, -3}, {-4, 4}, {1, 11}};
    CHECK_FALSE(fit_rational_curve(generic, 1).has_value());

    auto line = fit_rational_curve({{0, 1}, {1, 3}, {2, 5}}, 1);
    REQUIRE(line.has_value());
    CHECK(primitive_part(*line) == primitive_part(xy("y - 2*x - 1")));
    CHECK_THROWS_AS(fit_rational_curve({{0, 1}, {1, 3}}, 2), PreconditionError);
    CHECK_THROWS_AS(fit_rational_curve({{0, 1}, {0, 1}, {2, 5}}, 1), PreconditionError);
  }

  TEST_CASE("heights and radicals") {
    CHECK(height({Rat(Int(1), Int(2)), Rat(Int(-3), Int(4)), Rat(2)}) == 8);
    auto s = SqrtExpr::sqrt_of(Rat(8)) + SqrtExpr::sqrt_of(Rat(2));
    CHECK(s.single_radical() == Int(2));
    CHECK(s.coefficient(2) == Rat(3));
    CHECK((s * s).is_rational());
    CHECK((SqrtExpr::sqrt_of(Rat(3)) - SqrtExpr::sqrt_of(Rat(Int(27), Int(9)))).is_zero());
  }
}
