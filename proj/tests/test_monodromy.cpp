#include "doctest.h"
#include "ids/varieties.hpp"

using namespace ids;

namespace {

std::vector<int> parity(const std::vector<int>& w) {
  std::vector<int> out;
  for (int v : w) out.push_back(v % 2 == 0 ? 1 : -1);
  return out;
}

}  // namespace

TEST_SUITE("monodromy") {
  TEST_CASE("branch points") {
    auto z = branch_points(3, {{2, 4}});
    REQUIRE(z.size() == 1);
    CHECK(z[0].real() == doctest::Approx(1.0));
    CHECK(z[0].imag() == doctest::Approx(2.0 * std::sqrt(3.0)));
  }

  TEST_CASE("single, null and full windings") {
    const long m = 2;
    auto pts = random_points(31, 3);
    auto one = lasso_loop(m, pts, {1, 0, 0});
    CHECK(winding_numbers(one, branch_points(m, pts)) == std::vector<int>{1, 0, 0});
    CHECK(monodromy_signs(m, pts, one) == std::vector<int>{-1, 1, 1});
    auto none = lasso_loop(m, pts, {0, 0, 0});
    CHECK(monodromy_signs(m, pts, none) == std::vector<int>{1, 1, 1});
    auto all = lasso_loop(m, pts, {1, 1, 1});
    CHECK(monodromy_signs(m, pts, all) == std::vector<int>{-1, -1, -1});
  }

  TEST_CASE("signs depend only on winding numbers") {
    const long m = 5;
    auto pts = random_points(12, 4);
    std::vector<std::vector<int>> patterns{{1, 0, 1, 0}, {2, 1, 0, -1}, {-1, -1, 1, 0}};
    for (const auto& w : patterns) {
      auto coarse = lasso_loop(m, pts, w, 64, 0.0);
      auto fine = lasso_loop(m, pts, w, 256, 0.4);
      auto z = branch_points(m, pts);
      CHECK(winding_numbers(coarse, z) == w);
      CHECK(winding_numbers(fine, z) == w);
      CHECK(monodromy_signs(m, pts, coarse) == monodromy_signs(m, pts, fine));
      CHECK(monodromy_signs(m, pts, fine) == parity(w));
    }
  }

  TEST_CASE("loop through a branch point is rejected") {
    const long m = 1;
    std::vector<NormalizedPoint> pts{{2, 2}};
    auto z = branch_points(m, pts)[0];
    Loop bad{{0, 0}, z, 2.0 * z, {0, 0}};
    CHECK_THROWS_AS(monodromy_signs(m, pts, bad), DomainError);
  }
}
