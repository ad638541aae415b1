#include <doctest.h>

#include <random>

#include "rsurf/cone.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"

using namespace rsurf;

namespace {

SymplecticVector form(const char* s) { return parse_form(s); }

}  // namespace

TEST_CASE("face labels") {
  CHECK(FaceLabel(5, {}).str() == "M");
  CHECK(FaceLabel(5, {1, 2, 3, 4, 5}).str() == "MOABCD");
  CHECK(FaceLabel::parse(5, "MBC") == FaceLabel(5, {3, 4}));
  CHECK(FaceLabel(2, {}).str() == "OB");
  CHECK(FaceLabel(2, {2}).str() == "BOA");
  CHECK_THROWS_AS(FaceLabel::parse(5, "MX"), ParseError);
  CHECK_THROWS_AS(FaceLabel::parse(3, "MC"), ParseError);
  CHECK_THROWS_AS(FaceLabel::parse(5, "OA"), ParseError);
  for (int k = 3; k <= 8; ++k) CHECK(FaceLabel::all(k).size() == (std::size_t{1} << k));
  CHECK(FaceLabel::all(2).size() == 2);
}

TEST_CASE("vertices") {
  const auto v = vertices(5);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == form("1|1/3,1/3,1/3,1/3,1/3"));
  for (const auto& g : v) CHECK(is_reduced_relaxed(g));
  CHECK_THROWS_AS(vertices(2), DimensionError);
}

TEST_CASE("face classification") {
  CHECK(classify_face(form("1|1/3,1/3,1/3,1/3,1/3")).str() == "M");
  CHECK(classify_face(form("3|1,1,1,1,1")).str() == "M");
  CHECK(classify_face(form("1|1/4,1/4,1/4,1/4,1/4")).str() == "MO");
  CHECK(classify_face(form("1|9/20,7/20,4/20,3/20,2/20")).str() == "MABCD");
  CHECK(classify_face(form("1|1/2,1/5,1/6,1/7,1/8")).str() == "MOABCD");
  CHECK(classify_face(form("1|2/5,3/10,3/10,3/10,3/10")).str() == "MA");
  CHECK_THROWS_AS(classify_face(form("1|1/8,1/2,1/8,1/8,1/8")), PreconditionError);
  CHECK(classify_face(form("1|1/3,1/3")).str() == "OB");
  CHECK(classify_face(form("1|1/2,1/3")).str() == "BOA");
}

TEST_CASE("samples classify back to their face") {
  std::mt19937_64 rng(17);
  for (int k = 2; k <= 8; ++k) {
    for (const auto& f : FaceLabel::all(k)) {
      CAPTURE(f.str());
      const auto w = sample_face(f);
      CHECK(is_reduced(w));
      CHECK(classify_face(w) == f);
      if (k <= 6) {
        const auto r = sample_face(f, rng);
        CHECK(classify_face(r) == f);
      }
    }
  }
  CHECK(sample_face(FaceLabel(5, {})) == form("1|1/3,1/3,1/3,1/3,1/3"));
}

TEST_CASE("representability") {
  CHECK(is_representable(form("1|1/3,1/3,1/3,1/3,1/3")));
  CHECK_FALSE(is_representable(form("1|1/2,1/2")));
  CHECK(is_representable(form("1|1/3,1/3")));
  CHECK_FALSE(is_representable(form("1|1/2,1/2,1/2,1/2,1/2")));
  // Not reduced as given, but Cremona-equivalent to a reduced form.
  CHECK(is_representable(form("1|1/8,1/2,1/8,1/8,1/8")));
}
