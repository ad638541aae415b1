#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

using namespace rsurf;

namespace {

HomologyClass cls(const char* s) { return parse_class(s); }
SymplecticVector form(const char* s) { return parse_form(s); }

}  // namespace

TEST_CASE("Cremona reflection on basis classes") {
  const auto l1 = simple_root(1, 5);
  CHECK(reflect(HomologyClass::line(5), l1) == cls("2;1,1,1,0,0"));
  CHECK(reflect(HomologyClass::exceptional(1, 5), l1) == cls("1;0,1,1,0,0"));
  CHECK(reflect(HomologyClass::exceptional(4, 5), l1) == HomologyClass::exceptional(4, 5));
  CHECK_THROWS_AS(reflect(HomologyClass::line(5), cls("1;1,1,0,0,0")), PreconditionError);
}

TEST_CASE("reflections are involutive isometries fixing K") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int k = 3; k <= 8; ++k) {
    const auto roots = enumerate_roots(k).roots;
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int t = 0; t < 50; ++t) {
      std::vector<std::int64_t> cx(static_cast<std::size_t>(k + 1)), cy(cx.size());
      for (auto& v : cx) v = coeff(rng);
      for (auto& v : cy) v = coeff(rng);
      const HomologyClass x(cx), y(cy);
      const auto& r = roots[pick(rng)];
      CHECK(reflect(reflect(x, r), r) == x);
      CHECK(pairing(reflect(x, r), reflect(y, r)) == pairing(x, y));
      CHECK(reflect(canonical_class(k), r) == canonical_class(k));
    }
  }
}

TEST_CASE("form pull-back is compatible with class reflection") {
  const auto w = form("1|2/5,3/10,3/10,1/5,1/10");
  for (const auto& r : enumerate_roots(5).roots) {
    const auto wr = reflect(w, r);
    for (const auto& e : enumerate_exceptional(5)) CHECK(area(wr, e) == area(w, reflect(e, r)));
  }
}

TEST_CASE("reduction of classes") {
  CHECK_THROWS_AS(reduce(cls("2;1,1,1,1,1")), PreconditionError);
  CHECK_THROWS_AS(reduce(cls("3;2,2,2,0,0")), PreconditionError);
  CHECK_THROWS_AS(reduce(cls("1;1,1")), PreconditionError);

  const auto id = reduce(cls("3;1,1,1,1,1"));
  CHECK(id.steps.empty());
  CHECK(id.output == id.input);

  const auto t = reduce(cls("4;2,2,2,1,1"));
  CHECK(t.output == cls("2;1,1,0,0,0"));
  CHECK(t.output.a() <= t.input.a());
  CHECK(replay(t.input, t.steps) == t.output);
  CHECK(pairing(t.output, t.output) == pairing(t.input, t.input));
}

TEST_CASE("reduction lands on the unique reduced class of its orbit") {
  const auto part = oracle::orbit_partition(4);
  std::map<int, HomologyClass> rep;
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    if (oracle::relaxed_reduced(part.classes[i])) {
      CHECK(rep.count(part.component[i]) == 0);
      rep.emplace(part.component[i], part.classes[i]);
    }
  }
  CHECK(static_cast<int>(rep.size()) == part.components);
  for (std::size_t i = 0; i < part.classes.size(); i += 7) {
    const auto t = reduce(part.classes[i]);
    CHECK(t.output == rep.at(part.component[i]));
  }
}

TEST_CASE("K-pairing changes only through sign moves") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  int tested = 0;
  while (tested < 300) {
    std::vector<std::int64_t> c(6);
    for (auto& v : c) v = coeff(rng);
    HomologyClass x(c);
    if (pairing(x, x) <= 0) continue;
    ++tested;
    const auto t = reduce(x);
    HomologyClass cur = x;
    const auto k = canonical_class(5);
    for (const auto& m : t.steps) {
      const auto next = apply_move(cur, m);
      std::int64_t expected = pairing(cur, k);
      if (const auto* f = std::get_if<SignFlip>(&m)) expected -= 2 * cur.b(f->index);
      if (std::holds_alternative<Negation>(m)) expected = -expected;
      CHECK(pairing(next, k) == expected);
      cur = next;
    }
    CHECK(oracle::relaxed_reduced(t.output));
  }
}

TEST_CASE("form reduction") {
  const auto w = form("1|1/8,1/2,1/8,1/8,1/8");
  CHECK_FALSE(is_reduced(w));
  const auto t = reduce(w);
  CHECK(is_reduced(t.output));
  CHECK(replay(t.input, t.steps) == t.output);
  CHECK_THROWS_AS(reduce(form("1|1,1")), PreconditionError);
}

TEST_CASE("reducedness predicate") {
  CHECK(is_reduced(form("1|1/3,1/3,1/3,1/3,1/3")));
  CHECK_FALSE(is_reduced(form("1|1/2,1/2,1/2,0,0")));
  CHECK_FALSE(is_reduced(form("1|2/5,2/5,2/5,1/5,1/5")));
  REQUIRE(reduced_violation(form("1|2/5,2/5,2/5,1/5,1/5")).has_value());
  CHECK(is_reduced_relaxed(cls("2;1,1,0,0,0")));
}

TEST_CASE("packing predicate") {
  CHECK(is_packing_form(form("1|1/3,1/3,1/3,1/3,1/3")));
  CHECK_FALSE(is_packing_form(form("1|1/2,1/4,1/4,1/4,1/4")));
  CHECK_FALSE(is_packing_form(form("1|2/5,2/5,2/5,2/5,2/5")));
  CHECK_THROWS_AS(is_packing_form(form("1|1/3,1/3,1/3")), DimensionError);
}

TEST_CASE("balanced predicate") {
  CHECK(is_balanced(form("1|1/3,1/3,1/3,1/3,1/3")));
  CHECK(balanced_index(form("1|1/2,1/5,1/5,1/25,1/25")) == 2);
  CHECK(balanced_index(form("1|6/10,2/10,2/10,1/10,1/10")) == 2);
  CHECK_FALSE(is_balanced(form("1|1/2,1/4,1/8,1/16,1/32")));
}

TEST_CASE("balanced forms map to packing forms") {
  const auto p = balanced_to_packing(form("1|1/3,1/3,1/3,1/3,1/3"));
  CHECK(is_packing_form(p.form));
  CHECK(p.form.nu() == 1);

  // Any balancing index works for the monotone form, e.g. i = 3.
  const auto mono = form("1|1/3,1/3,1/3,1/3,1/3");
  const auto img = oracle::cremona_formula(mono, 3);
  CHECK(apply_move(mono, CremonaMove{3, 4, 5}) == img);
  CHECK(oracle::packing_inequalities(img.normalized()));

  CHECK_THROWS_AS(balanced_to_packing(form("1|1/2,1/4,1/8,1/16,1/32")), PreconditionError);

  std::mt19937_64 rng(5);
  int seen = 0;
  while (seen < 200) {
    const auto w = oracle::random_reduced_form(rng, 200);
    if (!is_balanced(w)) continue;
    ++seen;
    const auto q = balanced_to_packing(w);
    CHECK(oracle::packing_inequalities(q.form));
    CHECK(q.form == oracle::cremona_formula(w, q.move.i).normalized());
  }
}

TEST_CASE("move rendering") {
  CHECK(to_string(Move{CremonaMove{1, 2, 3}}) == "cremona(1,2,3)");
  CHECK(to_string(Move{SignFlip{2}}) == "flip(2)");
}
