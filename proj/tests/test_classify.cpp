#include <random>

#include "classify_oracle.hpp"
#include "doctest.h"
#include "ids/classify.hpp"
#include "ids/construct.hpp"

using namespace ids;

TEST_SUITE("classify") {
  TEST_CASE("witness examples") {
    PointSet line;
    line.m = 1;
    line.points = {{0, 0}, {1, 0}, {4, 0}, {9, 0}};
    auto a = structure_witness(line);
    CHECK(a.kind == WitnessKind::Line);
    CHECK(a.exceptional.empty());

    auto cs = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}}).set;
    cs.points.push_back({Rat(0), Rat(0)});
    auto b = structure_witness(cs);
    CHECK(b.kind == WitnessKind::Circle);
    CHECK(b.exceptional == std::vector<std::size_t>{4});
    CHECK(b.covered_count == 4);

    auto c = structure_witness(collinear_plus_apex(12));
    CHECK(c.kind == WitnessKind::Line);
    CHECK(c.covered_count == 9);
    CHECK(c.exceptional == std::vector<std::size_t>{0});
  }

  TEST_CASE("ties prefer a line") {
    PointSet s;
    s.m = 1;
    s.points = {{0, 0}, {3, 0}, {0, 4}};
    auto w = structure_witness(s);
    CHECK(w.kind == WitnessKind::Circle);
    s.points = {{0, 0}, {3, 0}};
    CHECK(structure_witness(s).kind == WitnessKind::Line);
    CHECK(structure_witness(s).defining == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("planted witnesses with generic extra points") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coord(-40, 40);
    for (int trial = 0; trial < 20; ++trial) {
      PointSet base = trial % 2 == 0
                          ? concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17},
                                                   {20, 21, 29}, {12, 5, 13}})
                                .set
                          : collinear_plus_apex(12);
      if (trial % 2 == 1) base.points.erase(base.points.begin());
      const std::size_t planted = base.size();
      const std::size_t j = static_cast<std::size_t>(trial % 6);
      PointSet s = base;
      while (s.size() < planted + j) {
        NormalizedPoint p{Rat(coord(rng)), Rat(coord(rng))};
        PointSet probe = s;
        probe.points.push_back(p);
        if (std::find(s.points.begin(), s.points.end(), p) != s.points.end()) continue;
        if (oracle::best_cover(probe).covered != planted) continue;
        s = probe;
      }
      auto w = structure_witness(s);
      CHECK(w.exceptional.size() == j);
      CHECK(w.covered_count == planted);
      CHECK((w.kind == WitnessKind::Circle) == (trial % 2 == 0));
    }
  }

  TEST_CASE("agrees with independent enumeration") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coord(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
      PointSet s;
      s.m = trial % 3 == 0 ? 3 : 1;
      std::size_t n = 2 + static_cast<std::size_t>(trial % 11);
      while (s.size() < n) {
        NormalizedPoint p{Rat(coord(rng)), Rat(coord(rng))};
        if (std::find(s.points.begin(), s.points.end(), p) == s.points.end()) s.points.push_back(p);
      }
      auto w = structure_witness(s);
      auto o = oracle::best_cover(s);
      CHECK(w.covered_count == o.covered);
      CHECK(w.covered_count + w.exceptional.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        bool exc = std::find(w.exceptional.begin(), w.exceptional.end(), i) != w.exceptional.end();
        CHECK(on_witness(s, w, s.points[i]) == !exc);
      }
    }
  }

  TEST_CASE("Erdos admissibility") {
    PointSet t;
    t.m = 1;
    t.points = {{0, 0}, {3, 0}, {0, 4}};
    CHECK(erdos_admissible(t).admissible);
    for (long h : {4L, 12L, 60L}) {
      auto r = erdos_admissible(collinear_plus_apex(h));
      CHECK_FALSE(r.admissible);
      CHECK(r.violation.size() == 3);
    }
    auto cs = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}}).set;
    auto r = erdos_admissible(cs);
    CHECK_FALSE(r.admissible);
    CHECK(r.violation.size() == 4);
    auto kk = load_fixture("kreisel_kurz_7");
    CHECK(erdos_admissible(kk).admissible);
    Int L = lattice_denominator(kk);
    for (const auto& op : {Transform{TransformKind::ReflectX, 0, 0, 1},
                           Transform{TransformKind::Scale, 0, 0, 3},
                           Transform{TransformKind::Translate, Rat(Int(5), L), Rat(Int(2), L), 1}})
      CHECK(erdos_admissible(transform(kk, op)).admissible);
  }
}
