#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

using namespace rsurf;

TEST_CASE("root counts for 3 <= k <= 8") {
  const int expected[] = {8, 20, 40, 72, 126, 240};
  for (int k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const auto d = enumerate_roots(k);
    CHECK(static_cast<int>(d.roots.size()) == expected[k - 3]);
    CHECK(static_cast<int>(positive_roots(k).size()) == expected[k - 3] / 2);
    CHECK(d.simple.size() == static_cast<std::size_t>(k));
  }
  CHECK_THROWS_AS(enumerate_roots(2), DimensionError);
}

TEST_CASE("roots agree with the reflection orbit and a brute force box") {
  for (int k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const auto d = enumerate_roots(k);
    const std::set<HomologyClass> mine(d.roots.begin(), d.roots.end());
    CHECK(mine == oracle::root_orbit(k));
    if (k <= 6) CHECK(mine == oracle::roots_in_box(k, 3));
  }
}

TEST_CASE("every root is integral on the simple roots with one sign") {
  for (int k = 3; k <= 8; ++k) {
    for (const auto& r : enumerate_roots(k).roots) {
      const auto c = root_coordinates(r);
      bool nonneg = true, nonpos = true;
      for (auto x : c) {
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
      }
      CHECK((nonneg || nonpos));
      CHECK(nonneg == is_positive_root(r));
    }
  }
}

TEST_CASE("root coordinates") {
  CHECK(root_coordinates(simple_root(1, 5)) == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  CHECK(root_coordinates(parse_class("0;-1,0,1,0,0")) == std::vector<std::int64_t>{0, 1, 1, 0, 0});
  CHECK_THROWS_AS(root_coordinates(parse_class("2;1,1,1,1,2")), PreconditionError);
}

TEST_CASE("exceptional classes") {
  CHECK(enumerate_exceptional(1).size() == 1);
  const auto e2 = enumerate_exceptional(2);
  CHECK(e2.size() == 3);
  CHECK(std::find(e2.begin(), e2.end(), parse_class("1;1,1")) != e2.end());
  const auto e5 = enumerate_exceptional(5);
  CHECK(e5.size() == 16);
  int by_degree[3] = {0, 0, 0};
  for (const auto& e : e5) {
    REQUIRE(e.a() <= 2);
    ++by_degree[e.a()];
  }
  CHECK(by_degree[0] == 5);
  CHECK(by_degree[1] == 10);
  CHECK(by_degree[2] == 1);
}

TEST_CASE("k = 2 has the single positive root E_1 - E_2") {
  const auto pos = positive_roots(2);
  REQUIRE(pos.size() == 1);
  CHECK(pos[0] == parse_class("0;-1,1"));
}

TEST_CASE("negative sphere classes in the BF basis") {
  // E'_1 - E'_2
  const BFVector e12{0, 0, {Rational(-1), Rational(1), Rational(0), Rational(0)}};
  auto c = classify_negative_sphere_class(e12);
  CHECK(c.family == SphereFamily::Exceptional);
  CHECK(c.parameter == 1);

  const BFVector b_minus_f{1, -1, {0, 0, 0, 0}};
  c = classify_negative_sphere_class(b_minus_f);
  CHECK(c.family == SphereFamily::Section);
  CHECK(c.parameter == 1);

  // E_1 - E_2 in the H, E_i basis is B - F.
  c = classify_negative_sphere_class(parse_class("0;-1,1,0,0,0"));
  CHECK(c.family == SphereFamily::Section);
  CHECK(c.parameter == 1);

  const BFVector fiber{0, 1, {1, 1, 0, 0}};
  CHECK(classify_negative_sphere_class(fiber).family == SphereFamily::Fiber);

  // 5H - 3E_1 - 3E_2 - 2E_3 - 2E_4 - 2E_5 has B coefficient 2 after the base change.
  CHECK(classify_negative_sphere_class(parse_class("5;3,3,2,2,2")).family == SphereFamily::NotListed);
  // B + F + E'_1 - E'_2 - E'_3 - E'_4: an E'_1 coefficient outside {0, 1}.
  CHECK(classify_negative_sphere_class(parse_class("3;2,2,1,1,1")).family == SphereFamily::NotListed);
  CHECK_THROWS_AS(classify_negative_sphere_class(parse_class("1;0,0,0,0,0")), PreconditionError);
}

TEST_CASE("least area exceptional class") {
  const auto mono = parse_form("1|1/3,1/3,1/3,1/3,1/3");
  const auto e = min_area_exceptional(mono);
  CHECK(e == HomologyClass::exceptional(5, 5));
  CHECK(area(mono, e) == Rational(1, 3));
  const auto w = parse_form("1|1/2,1/4,1/4,1/4,1/4");
  CHECK(area(w, min_area_exceptional(w)) == Rational(1, 4));
  const auto u = parse_form("1|2/5,3/10,3/10,1/5,1/10");
  CHECK(min_area_exceptional(u) == HomologyClass::exceptional(5, 5));
  CHECK(area(u, min_area_exceptional(u)) == Rational(1, 10));
  for (const auto& x : enumerate_exceptional(5)) CHECK(area(u, x) >= Rational(1, 10));
}
