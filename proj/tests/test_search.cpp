#include "doctest.h"
#include "ids/construct.hpp"
#include "search_oracle.hpp"

using namespace ids;

namespace {

SearchConfig config(long a, long m, long B, long R) {
  SearchConfig c;
  c.a = a;
  c.m_values = {m};
  c.box = B;
  c.radius_bound = R;
  return c;
}

bool contains(const std::vector<NormalizedPoint>& v, const NormalizedPoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

CliqueResult clique_of(const SearchConfig& cfg, const CliqueFlags& flags) {
  const long m = cfg.m_values.front();
  auto cand = candidates_two_anchors(cfg, m);
  auto g = build_graph(m, {Rat(0), Rat(0)}, {Rat(cfg.a), Rat(0)}, cand);
  return max_clique(g, flags);
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("candidate examples") {
    auto c = candidates_two_anchors(config(3, 1, 10, 5), 1);
    CHECK(contains(c, {Rat(0), Rat(4)}));
    CHECK(contains(c, {Rat(0), Rat(-4)}));
    // r0 = r1 = 3 gives t^2 = 27/4 for m = 1, a rational square for m = 3.
    NormalizedPoint mid{Rat(Int(3), Int(2)), Rat(Int(3), Int(2))};
    auto c1 = candidates_two_anchors(config(3, 1, 10, 3), 1);
    for (const auto& p : c1) CHECK(p.x != Rat(Int(3), Int(2)));
    auto c3 = candidates_two_anchors(config(3, 3, 10, 3), 3);
    CHECK(contains(c3, mid));
    CHECK(contains(c3, {mid.x, -mid.t}));
    CHECK_THROWS_AS(candidates_two_anchors(config(3, 4, 10, 3), 4), DomainError);
    CHECK_THROWS_AS(candidates_two_anchors(config(5, 1, 4, 3), 1), DomainError);
  }

  TEST_CASE("triangle inequality excludes r0 = 1, r1 = 5 for a = 3") {
    auto c = candidates_two_anchors(config(3, 1, 10, 5), 1);
    for (const auto& p : c) {
      Rat r0sq = dist2(p, {Rat(0), Rat(0)}, 1);
      Rat r1sq = dist2(p, {Rat(3), Rat(0)}, 1);
      CHECK_FALSE((r0sq == Rat(1) && r1sq == Rat(25)));
    }
  }

  TEST_CASE("machine-integer and exact enumeration agree") {
    for (long a = 1; a <= 6; ++a)
      for (long m : {1L, 2L, 3L, 7L, 15L}) {
        auto cfg = config(a, m, 14, 17);
        CHECK(candidates_two_anchors(cfg, m) == candidates_two_anchors_exact(cfg, m));
      }
  }

  TEST_CASE("graph examples") {
    auto g = build_graph(1, {Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {});
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    auto r = max_clique(g, {});
    CHECK(r.max_size == 2);
    auto h = build_graph(1, {Rat(0), Rat(0)}, {Rat(3), Rat(0)},
                         {{Rat(0), Rat(4)}, {Rat(0), Rat(-4)}, {Rat(Int(3), Int(2)), Rat(2)}});
    CHECK(h.adjacent(2, 3));
    CHECK_FALSE(h.adjacent(2, 4));
    CHECK_THROWS_AS(build_graph(1, {Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {{Rat(0), Rat(0)}}),
                    PreconditionError);
    // Triangle (0,0), (3,0), (0,4).
    auto t = build_graph(1, {Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {{Rat(0), Rat(4)}});
    CHECK(max_clique(t, {}).max_size == 3);
  }

  TEST_CASE("matches the brute-force oracle") {
    for (long a = 1; a <= 5; ++a)
      for (long m : {1L, 2L, 3L, 6L, 10L}) {
        const long B = 12, R = 12;
        auto cfg = config(a, m, B, R);
        auto cand = candidates_two_anchors(cfg, m);
        CHECK(cand == oracle::lattice_candidates(a, m, B, R));
        for (int mode = 0; mode < 3; ++mode) {
          CliqueFlags f;
          f.require_noncollinear = mode == 1;
          f.require_erdos = mode == 2;
          auto got = clique_of(cfg, f);
          auto want = oracle::maximum_cliques(a, m, cand, f.require_noncollinear, f.require_erdos);
          CHECK(oracle::as_set(got) == want);
          for (const auto& s : got.cliques) {
            CHECK(verify_ids(s).accepted);
            if (f.require_erdos) CHECK(erdos_admissible(s).admissible);
          }
        }
      }
  }

  TEST_CASE("deterministic across worker counts") {
    auto cfg = config(4, 3, 20, 20);
    for (int mode = 0; mode < 3; ++mode) {
      CliqueFlags f;
      f.require_noncollinear = mode == 1;
      f.require_erdos = mode == 2;
      std::vector<std::set<oracle::Clique>> outs;
      std::vector<std::vector<PointSet>> raw;
      for (unsigned w : {1u, 2u, 8u}) {
        f.workers = w;
        auto r = clique_of(cfg, f);
        outs.push_back(oracle::as_set(r));
        raw.push_back(r.cliques);
      }
      CHECK(outs[0] == outs[1]);
      CHECK(outs[0] == outs[2]);
      for (std::size_t i = 0; i < raw[0].size(); ++i) {
        CHECK(raw[0][i].points == raw[1][i].points);
        CHECK(raw[0][i].points == raw[2][i].points);
      }
    }
  }

  TEST_CASE("enlarging the bounds never shrinks the maximum") {
    for (long m : {1L, 3L}) {
      std::size_t prev = 0, prev_e = 0;
      for (long B = 4; B <= 20; B += 4) {
        auto cfg = config(2, m, B, B);
        auto r = clique_of(cfg, {});
        CliqueFlags e;
        e.require_erdos = true;
        auto re = clique_of(cfg, e);
        CHECK(r.max_size >= prev);
        CHECK(re.max_size >= prev_e);
        prev = r.max_size;
        prev_e = re.max_size;
      }
    }
  }

  TEST_CASE("recovers the apex set from its own pool") {
    auto s = collinear_plus_apex(12);
    std::vector<NormalizedPoint> cand;
    for (const auto& p : s.points) {
      NormalizedPoint q{p.x + Rat(35), p.t};
      if (q == NormalizedPoint{Rat(0), Rat(0)} || q == NormalizedPoint{Rat(70), Rat(0)}) continue;
      cand.push_back(q);
    }
    auto g = build_graph(1, {Rat(0), Rat(0)}, {Rat(70), Rat(0)}, cand);
    auto r = max_clique(g, {});
    CHECK(r.max_size == 10);
    REQUIRE(r.cliques.size() == 1);
    CHECK(verify_ids(r.cliques[0]).accepted);
  }

  TEST_CASE("target size and result limits") {
    auto cfg = config(3, 1, 10, 10);
    CliqueFlags f;
    f.target_size = 100;
    auto r = clique_of(cfg, f);
    CHECK(r.cliques.empty());
    CliqueFlags lim;
    lim.require_noncollinear = true;
    lim.max_results = 1;
    auto l = clique_of(config(5, 1, 20, 20), lim);
    CHECK(l.cliques.size() <= 1);
    auto runs = run_search([] {
      SearchConfig c;
      c.a = 3;
      c.m_values = {1, 3};
      c.box = 10;
      c.radius_bound = 10;
      return c;
    }());
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].m == 1);
    CHECK(runs[1].m == 3);
  }
}
