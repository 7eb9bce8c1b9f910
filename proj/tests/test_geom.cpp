#include <random>

#include "doctest.h"
#include "ids/construct.hpp"
#include "ids/geom.hpp"

using namespace ids;

namespace {

NormalizedPoint P(long x, long t) { return {Rat(x), Rat(t)}; }

PointSet make(long m, std::vector<NormalizedPoint> pts) {
  PointSet s;
  s.m = m;
  s.points = std::move(pts);
  return s;
}

DistanceMatrix dm(std::vector<std::vector<long>> rows) {
  DistanceMatrix d;
  for (auto& r : rows) {
    std::vector<Int> row;
    for (long v : r) row.push_back(v);
    d.d.push_back(row);
  }
  return d;
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("squared distance") {
    CHECK(dist2(P(2, 5), P(2, 5), 7) == Rat(0));
    CHECK(dist2(P(0, 0), P(3, 4), 1) == Rat(25));
    CHECK(dist2(P(0, 0), P(1, 1), 3) == Rat(4));
  }

  TEST_CASE("verify examples") {
    auto a = verify_ids(make(1, {P(0, 0), P(3, 0), P(0, 4)}));
    REQUIRE(a.accepted);
    CHECK(a.distances[0][1] == 3);
    CHECK(a.distances[0][2] == 4);
    CHECK(a.distances[1][2] == 5);
    auto b = verify_ids(make(1, {P(0, 0), P(1, 0), P(0, 1)}));
    CHECK_FALSE(b.accepted);
    CHECK(b.bad_i == 1);
    CHECK(b.bad_j == 2);
    CHECK(b.bad_dist2 == Rat(2));
    auto c = verify_ids(make(3, {P(0, 0), P(2, 0), P(1, 1)}));
    REQUIRE(c.accepted);
    CHECK(c.distances[1][2] == 2);
    CHECK_THROWS_AS(verify_ids(make(1, {P(0, 0), P(0, 0)})), DomainError);
  }

  TEST_CASE("collinearity") {
    CHECK(collinear3(P(0, 0), P(1, 0), P(2, 0), 1));
    CHECK_FALSE(collinear3(P(0, 0), P(1, 0), P(0, 1), 1));
    CHECK(collinear3(P(0, 0), P(1, 1), P(2, 2), 1));
  }

  TEST_CASE("concyclicity") {
    CHECK(concyclic4(P(1, 0), P(0, 1), P(-1, 0), P(0, -1), 1));
    CHECK(concyclic4(P(0, 0), P(1, 0), P(1, 1), P(0, 1), 1));
    CHECK_FALSE(concyclic4(P(0, 0), P(1, 0), P(0, 1), P(5, 7), 1));
    // Hand expansion of the determinant for the last example.
    CHECK(concyclic_det(P(0, 0), P(1, 0), P(0, 1), P(5, 7), 1) != Rat(0));
    auto deg = concyclic4_checked(P(0, 0), P(1, 0), P(2, 0), P(5, 7), 1);
    CHECK(deg.degenerate);
    CHECK_FALSE(deg.concyclic);
  }

  TEST_CASE("circumradius") {
    CHECK(circumradius2(3, 4, 5) == Rat(Int(25), Int(4)));
    CHECK(circumradius2(1, 1, 1) == Rat(Int(1), Int(3)));
    CHECK_THROWS_AS(circumradius2(1, 2, 3), DomainError);
    for (long n = 1; n < 30; ++n) {
      Rat d(Int(n), Int(7));
      CHECK(circumradius2(d, d, d) == d * d / Rat(3));
    }
  }

  TEST_CASE("reconstruction examples") {
    auto a = reconstruct_from_distances(dm({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}}));
    CHECK(a.m == 1);
    CHECK(a.points[0] == P(0, 0));
    CHECK(a.points[1] == P(3, 0));
    CHECK(a.points[2].x == Rat(0));
    CHECK(abs(a.points[2].t) == Rat(4));
    auto b = reconstruct_from_distances(dm({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}));
    CHECK(b.m == 1);
    CHECK(b.points[1] == P(1, 0));
    CHECK(b.points[2] == P(3, 0));
    auto c = reconstruct_from_distances(dm({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    CHECK(c.m == 3);
    CHECK(c.points[2].x == Rat(1));
    CHECK(abs(c.points[2].t) == Rat(1));
    CHECK_THROWS_AS(reconstruct_from_distances(dm({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})), DomainError);
    CHECK_THROWS(reconstruct_from_distances(dm({{0, 1}, {2, 0}})));
  }

  TEST_CASE("reconstruction is a right inverse of the distance map") {
    std::mt19937_64 rng(5);
    int done = 0;
    for (long h = 1; h <= 60; ++h) {
      auto s = collinear_plus_apex(h);
      if (s.size() < 3) continue;
      std::shuffle(s.points.begin(), s.points.end(), rng);
      auto d = distance_matrix(s);
      auto r = reconstruct_from_distances(d);
      CHECK(distance_matrix(r).d == d.d);
      CHECK(verify_ids(r).accepted);
      ++done;
    }
    auto triples = primitive_triples(50);
    for (std::size_t u = 0; u < triples.size() && done < 110; ++u)
      for (std::size_t v = u + 1; v < triples.size() && done < 110; ++v) {
        auto cs = concyclic_pythagorean({{0, 1, 1}, triples[u], triples[v]});
        auto d = distance_matrix(cs.set);
        auto r = reconstruct_from_distances(d);
        CHECK(distance_matrix(r).d == d.d);
        ++done;
      }
    CHECK(done >= 100);
  }

  TEST_CASE("reconstruction lands in the half-integer lattice of the nearest distance") {
    auto s = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}}).set;
    auto r = reconstruct_from_distances(distance_matrix(s));
    REQUIRE(r.M.has_value());
    Int twoM = 2 * *r.M;
    for (const auto& p : r.points) {
      CHECK((p.x * Rat(twoM)).is_integer());
      CHECK((p.t * Rat(twoM)).is_integer());
    }
  }

  TEST_CASE("diameter") {
    CHECK(diameter(make(1, {P(0, 0), P(3, 0), P(0, 4)})) == 5);
    CHECK(diameter(make(1, {P(0, 0), P(7, 0)})) == 7);
    CHECK(diameter(collinear_plus_apex(12)) == 70);
  }

  TEST_CASE("minimal angle") {
    auto a = min_angle_cos2(make(1, {P(0, 0), P(1, 0), P(0, 1)}));
    CHECK(a.cos2 == Rat(Int(1), Int(2)));
    CHECK(a.cos_sign == 1);
    auto b = min_angle_cos2(make(3, {P(0, 0), P(2, 0), P(1, 1)}));
    CHECK(b.cos2 == Rat(Int(1), Int(4)));
    // A collinear triple never provides the minimum angle.
    auto c = min_angle_cos2(make(1, {P(0, 0), P(1, 0), P(2, 0), P(0, 1)}));
    CHECK(c.cos2 < Rat(1));
    CHECK_THROWS(min_angle_cos2(make(1, {P(0, 0), P(1, 0), P(2, 0)})));
  }

  TEST_CASE("predicates invariant under transforms") {
    auto s = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}}).set;
    const auto& q = s.points;
    Int L = lattice_denominator(s);
    for (const auto& op : {Transform{TransformKind::ReflectX, 0, 0, 1},
                           Transform{TransformKind::Translate, Rat(Int(1), L), Rat(Int(3), L), 1},
                           Transform{TransformKind::Scale, 0, 0, 5}}) {
      auto t = transform(s, op);
      const auto& r = t.points;
      CHECK(collinear3(q[0], q[1], q[2], s.m) == collinear3(r[0], r[1], r[2], t.m));
      CHECK(concyclic4(q[0], q[1], q[2], q[3], s.m) == concyclic4(r[0], r[1], r[2], r[3], t.m));
    }
  }
}
