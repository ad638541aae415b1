#include <doctest.h>

#include <algorithm>

#include "rsurf/errors.hpp"
#include "rsurf/tables.hpp"

using namespace rsurf;

namespace {

const TableRow& row(const Table& t, const std::string& face) {
  const auto it = std::find_if(t.rows.begin(), t.rows.end(), [&](const TableRow& r) { return r.face == face; });
  REQUIRE(it != t.rows.end());
  return *it;
}

}  // namespace

TEST_CASE("regenerated tables have one row per face") {
  CHECK(regenerate_table(2).rows.size() == 2);
  CHECK(regenerate_table(3).rows.size() == 8);
  CHECK(regenerate_table(4).rows.size() == 16);
  CHECK(regenerate_table(5).rows.size() == 32);
  CHECK_THROWS_AS(regenerate_table(6), DimensionError);
}

TEST_CASE("selected rows") {
  const auto t4 = regenerate_table(4);
  CHECK(row(t4, "MOB").gamma_l == "A_1×A_1");
  CHECK(row(t4, "MOB").n_omega == "8");
  CHECK(row(t4, "MOB").pi1 == "Z^8");
  const auto t3 = regenerate_table(3);
  CHECK(row(t3, "MAB").gamma_l == "A_1");
  CHECK(row(t3, "MAB").n_omega == "3");
  CHECK(row(t3, "MAB").pi1 == "Z^5");
  const auto t5 = regenerate_table(5);
  CHECK(row(t5, "MBC").gamma_l == "A_1×A_1×A_1");
  CHECK(row(t5, "MBC").n_omega == "17");
  CHECK(row(t5, "MBC").pi1.empty());
  CHECK(row(t5, "M").area == "monotone");
}

TEST_CASE("small tables match the golden files exactly") {
  for (int k = 2; k <= 4; ++k) {
    CAPTURE(k);
    const auto t = regenerate_table(k);
    CHECK(compare_with_golden(t).empty());
    CHECK(matches_golden(t));
    const auto golden = parse_markdown_table(k, golden_markdown(k));
    CHECK(golden.rows == t.rows);
  }
}

TEST_CASE("k = 5 table differs from the golden file only in the whitelisted cell") {
  const auto t = regenerate_table(5);
  const auto diff = compare_with_golden(t);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].face == "MC");
  CHECK(diff[0].column == "Γ_L");
  CHECK(diff[0].expected == "A_2×A_2");
  CHECK(diff[0].actual == "A_1×A_1×A_2");
  CHECK(diff[0].whitelisted);
  CHECK(matches_golden(t));
}

TEST_CASE("a corrupted cell is reported and not whitelisted") {
  auto t = regenerate_table(5);
  for (auto& r : t.rows)
    if (r.face == "MB") r.n_omega = "12";
  const auto diff = compare_with_golden(t);
  CHECK(diff.size() == 2);
  CHECK_FALSE(matches_golden(t));
}

TEST_CASE("markdown rendering round trips") {
  for (int k = 2; k <= 5; ++k) {
    const auto t = regenerate_table(k);
    CHECK(parse_markdown_table(k, render_markdown(t)).rows == t.rows);
    CHECK_FALSE(render_plain(t).empty());
  }
}

TEST_CASE("face conditions") {
  CHECK(face_condition(FaceLabel::parse(5, "M")) == "monotone");
  CHECK(face_condition(FaceLabel::parse(5, "MOABCD")) == "λ<1; c_1>c_2>c_3>c_4>c_5");
  CHECK(face_condition(FaceLabel::parse(5, "MAC")) == "λ=1; c_1>c_2=c_3>c_4=c_5");
  CHECK(face_condition(FaceLabel::parse(5, "MBC")) == "λ=1; c_1=c_2>c_3>c_4=c_5");
}
