#include <doctest.h>

#include <random>

#include "rsurf/errors.hpp"
#include "rsurf/lattice.hpp"

using namespace rsurf;

namespace {

HomologyClass cls(const char* s) { return parse_class(s); }
SymplecticVector form(const char* s) { return parse_form(s); }

}  // namespace

TEST_CASE("pairing on basis classes") {
  const auto h = HomologyClass::line(5);
  const auto e1 = HomologyClass::exceptional(1, 5);
  CHECK(pairing(h, h) == 1);
  CHECK(pairing(e1, e1) == -1);
  CHECK(pairing(h, e1) == 0);
  const auto q = cls("2;1,1,1,1,1");
  CHECK(pairing(q, q) == -1);
}

TEST_CASE("pairing rejects mismatched k") {
  CHECK_THROWS_AS(pairing(HomologyClass::line(3), HomologyClass::line(4)), DimensionError);
  CHECK_THROWS_AS(HomologyClass::zero(9), DimensionError);
  CHECK_THROWS_AS(HomologyClass::zero(0), DimensionError);
}

TEST_CASE("canonical class") {
  const auto k5 = canonical_class(5);
  CHECK(k5 == cls("-3;-1,-1,-1,-1,-1"));
  CHECK(pairing(k5, k5) == 4);
  const auto k3 = canonical_class(3);
  CHECK(pairing(k3, k3) == 6);
  for (int k = 1; k <= 8; ++k) {
    const auto kk = canonical_class(k);
    CHECK(pairing(kk, kk) == 9 - k);
  }
}

TEST_CASE("area evaluation") {
  const auto mono = form("1|1/3,1/3,1/3,1/3,1/3");
  CHECK(area(mono, cls("1;1,1,1,0,0")) == 0);
  CHECK(area(mono, HomologyClass::exceptional(5, 5)) == Rational(1, 3));
  CHECK(area(form("1|1/2,1/4,1/4,1/4,1/4"), cls("0;-1,1,0,0,0")) == Rational(1, 4));
}

TEST_CASE("rational and form parsing") {
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_form("1|1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3"), ParseError);
  CHECK_THROWS_AS(parse_form("0|1/3"), ParseError);
  CHECK_THROWS_AS(SymplecticVector(Rational(0), {Rational(1, 3)}), PreconditionError);
  CHECK_THROWS_AS(parse_class("1,1,1"), ParseError);
  CHECK_THROWS_AS(parse_class("1;1/2,1"), ParseError);
  CHECK(to_string(form("3|1,1,1")) == "3|1,1,1");
  CHECK(to_string(cls("4;2,2,2,1,1")) == "4;2,2,2,1,1");
  CHECK(to_symbolic(cls("2;1,1,1,0,0")) == "2H-E1-E2-E3");
}

TEST_CASE("normalized BF coordinates of a k = 3 monotone form") {
  const auto v = normalize_bf(to_bf_basis(form("1|1/3,1/3,1/3")));
  CHECK(v.mu == 1);
  CHECK(v.f == 1);
  REQUIRE(v.a.size() == 2);
  CHECK(v.a[0] == Rational(1, 2));
  CHECK(v.a[1] == Rational(1, 2));
}

TEST_CASE("normalization on the wall nu == c_1 is refused") {
  CHECK_THROWS_AS(normalize_bf(to_bf_basis(form("1|1,1/2"))), PreconditionError);
}

TEST_CASE("BF round trips") {
  CHECK(class_from_bf_basis(to_bf_basis(HomologyClass::exceptional(3, 5))) ==
        HomologyClass::exceptional(3, 5));
  CHECK_THROWS_AS(to_bf_basis(HomologyClass::line(1)), DimensionError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 7;
    std::vector<std::int64_t> c(static_cast<std::size_t>(k + 1));
    for (auto& x : c) x = coeff(rng);
    const HomologyClass x(c);
    const auto bf = to_bf_basis(x);
    CHECK(class_from_bf_basis(bf) == x);
    // The area of a class is the same whichever basis it is computed in.
    const auto w = form("10|3,2,2,1,1");
    if (k == 5) {
      const auto wb = to_bf_basis(w);
      Rational a = bf.mu * wb.mu + bf.f * wb.f;
      for (std::size_t i = 0; i < bf.a.size(); ++i) a -= bf.a[i] * wb.a[i];
      CHECK(a == area(w, x));
    }
  }
  const auto w = form("1|2/5,3/10,3/10,1/5,1/10");
  CHECK(form_from_bf_basis(to_bf_basis(w)) == w);
}
