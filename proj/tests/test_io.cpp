#include <filesystem>

#include "doctest.h"
#include "ids/construct.hpp"
#include "ids/serialize.hpp"
#include "ids/svg.hpp"

using namespace ids;

TEST_SUITE("io") {
  TEST_CASE("point set file round trip") {
    auto dir = std::filesystem::temp_directory_path() / "ids_io_test";
    std::filesystem::create_directories(dir);
    std::vector<PointSet> sets{collinear_plus_apex(12),
                               concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}}).set,
                               load_fixture("kreisel_kurz_7")};
    PointSet eq;
    eq.m = 3;
    eq.points = {{0, 0}, {2, 0}, {1, 1}};
    eq.name = "equilateral";
    sets.push_back(eq);
    for (const auto& s : sets) {
      auto path = (dir / "s.json").string();
      write_pointset_file(path, s);
      auto back = read_pointset_file(path);
      CHECK(back.m == s.m);
      CHECK(back.points == s.points);
      CHECK(back.name == s.name);
      CHECK(pointset_to_json(back) == pointset_to_json(s));
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("file format details") {
    auto s = pointset_from_json(parse_json_text(R"({"m": 3, "denom": "2", "points": [[0,0],["4","0"],[2,2]]})"));
    CHECK(s.points[2] == NormalizedPoint{Rat(1), Rat(1)});
    auto j = pointset_to_json(s);
    CHECK(j["denom"] == "2");
    CHECK(j["points"][1][0] == "4");
    CHECK_THROWS_AS(parse_json_text("{\"m\": "), ParseError);
    CHECK_THROWS_AS(pointset_from_json(parse_json_text(R"({"m":"4","denom":"2","points":[]})")),
                    DomainError);
    CHECK_THROWS_AS(pointset_from_json(parse_json_text(R"({"m":"1","denom":"3","points":[]})")),
                    DomainError);
    CHECK_THROWS_AS(
        pointset_from_json(parse_json_text(R"({"m":"1","denom":"2","points":[[0,0],[0,0]]})")),
        DomainError);
    CHECK_THROWS_AS(pointset_from_json(parse_json_text(R"({"m":"1","points":[]})")), ParseError);
    auto dm = distance_matrix_from_json(parse_json_text(R"({"n": 2, "d": [["0","7"],["7","0"]]})"));
    CHECK(dm.d[0][1] == 7);
    CHECK(distance_matrix_to_json(dm)["d"][1][0] == "7");
  }

  TEST_CASE("SVG output is stable") {
    auto s = collinear_plus_apex(12);
    auto a = plot_svg(s, structure_witness(s));
    auto b = plot_svg(s, structure_witness(s));
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("<line") != std::string::npos);
    std::size_t circles = 0;
    for (std::size_t p = a.find("<circle"); p != std::string::npos; p = a.find("<circle", p + 1))
      ++circles;
    CHECK(circles == s.size());
    auto c = concyclic_pythagorean({{0, 1, 1}, {3, 4, 5}, {5, 12, 13}}).set;
    auto svg = plot_svg(c, structure_witness(c));
    CHECK(svg.find("-0.000000") == std::string::npos);
    CHECK(plot_svg(c, std::nullopt) != svg);
  }
}
