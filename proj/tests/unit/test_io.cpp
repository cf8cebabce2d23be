#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "emst/errors.hpp"
#include "emst/io.hpp"
#include "emst/memmodel.hpp"
#include "emst/run.hpp"

using namespace emst;

TEST_SUITE("io") {
  TEST_CASE("point files round-trip exactly") {
    for (Distribution d : {Distribution::uniform_square, Distribution::clustered, Distribution::grid_perturbed}) {
      for (std::size_t n : {1, 17, 200}) {
        const auto pts = generate_points(n, 77, d);
        std::stringstream buf;
        write_points(buf, pts);
        const auto back = parse_points(buf);
        REQUIRE(back.size() == pts.size());
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(back[i].x == pts[i].x);
          CHECK(back[i].y == pts[i].y);
        }
      }
    }
  }

  TEST_CASE("parse skips blanks and comments") {
    std::istringstream in("# header\n\n  1 2\n3.5\t-4e1  \r\n");
    const auto pts = parse_points(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1].x == 3.5);
    CHECK(pts[1].y == -40.0);
  }

  TEST_CASE("parse errors name the line") {
    auto message = [](const std::string& text) {
      std::istringstream in(text);
      try {
        parse_points(in);
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("1 2\n3 x\n").find("line 2") != std::string::npos);
    CHECK(message("1 2\n\n5\n").find("line 3") != std::string::npos);
    CHECK(message("1 2 3\n").find("line 1") != std::string::npos);
    CHECK(message("nan 1\n").find("line 1") != std::string::npos);
    CHECK(message("") != "no error");
  }

  TEST_CASE("generators are deterministic and duplicate-free") {
    for (Distribution d : {Distribution::uniform_square, Distribution::clustered, Distribution::grid_perturbed}) {
      const auto a = generate_points(100, 42, d);
      const auto b = generate_points(100, 42, d);
      std::ostringstream sa;
      std::ostringstream sb;
      write_points(sa, a);
      write_points(sb, b);
      CHECK(sa.str() == sb.str());
      std::set<std::pair<double, double>> distinct;
      for (const Vec2& p : generate_points(50, 3, d)) distinct.emplace(p.x, p.y);
      CHECK(distinct.size() == 50);
      CHECK(generate_points(1, 9, d).size() == 1);
    }
    CHECK(parse_distribution("clustered") == Distribution::clustered);
    CHECK_THROWS_AS(parse_distribution("gaussian"), InputError);
  }

  TEST_CASE("grid-perturbed points have integer coordinates") {
    for (const Vec2& p : generate_points(64, 1, Distribution::grid_perturbed)) {
      CHECK(p.x == static_cast<double>(static_cast<long>(p.x)));
      CHECK(p.y == static_cast<double>(static_cast<long>(p.y)));
    }
  }

  TEST_CASE("edge lines use nine significant digits") {
    CHECK(format_edge({0, 2, 3.37}) == "0 2 1.83575598");
    CHECK(format_edge({4, 9, 25.0}) == "4 9 5");
  }

  TEST_CASE("duplicate points in a file are rejected") {
    std::istringstream in("0 0\n1 1\n0 0\n");
    CHECK_THROWS_AS(PointSet(parse_points(in)), InputError);
  }

  TEST_CASE("algorithm names") {
    CHECK(parse_algo("net") == Algo::net);
    CHECK(parse_algo("simple") == Algo::simple);
    CHECK_THROWS_AS(parse_algo("prim"), InputError);
  }
}
