#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"
#include "rsurf/smcg.hpp"

using namespace rsurf;

namespace {

SymplecticVector form(const char* s) { return parse_form(s); }
SymplecticVector face(int k, const char* label) { return sample_face(FaceLabel::parse(k, label)); }
const SymplecticVector kMono = parse_form("1|1/3,1/3,1/3,1/3,1/3");

DynkinType type_of(std::vector<DynkinComponent> c) { return DynkinType(std::move(c)); }

}  // namespace

TEST_CASE("Dynkin classification of simple root subsets") {
  CHECK(dynkin_type({1, 3, 4, 5}, 5).str() == "D_4");
  CHECK(dynkin_type({1, 2, 4, 5}, 5).str() == "A_1×A_3");
  CHECK(dynkin_type({}, 5).str() == "trivial");
  CHECK(dynkin_type({1, 2, 3, 4, 5}, 5).str() == "D_5");
  CHECK(dynkin_type({1, 2, 3, 4, 5, 6}, 6).str() == "E_6");
  CHECK(dynkin_type({1, 2, 3, 4, 5, 6, 7}, 7).str() == "E_7");
  CHECK(dynkin_type({1, 2, 3, 4, 5, 6, 7, 8}, 8).str() == "E_8");
  CHECK(dynkin_type({2, 3, 4}, 5).str() == "A_3");
  CHECK(dynkin_type({2, 3}, 5).is_type_a());
  CHECK(DynkinType().is_type_a());
}

TEST_CASE("Weyl orders match the orbit oracle") {
  CHECK(weyl_order(type_of({{DynkinFamily::A, 4}})) == 120);
  CHECK(weyl_order(type_of({{DynkinFamily::D, 4}})) == 192);
  CHECK(weyl_order(type_of({{DynkinFamily::D, 5}})) == 1920);
  CHECK(weyl_order(DynkinType()) == 1);
  for (int k = 3; k <= 6; ++k) {
    for (const auto& f : FaceLabel::all(k)) {
      const auto sys = lagrangian_system(sample_face(f));
      CAPTURE(f.str());
      CHECK(weyl_order(dynkin_type(sys.simple, k)) == oracle::weyl_orbit_order(sys.simple, k));
    }
  }
  CHECK(weyl_order(dynkin_type({1, 2, 3, 4, 5, 6}, 6)) == 51840);
}

TEST_CASE("Lagrangian systems") {
  const auto mono = lagrangian_system(kMono);
  CHECK(mono.roots.size() == 40);
  CHECK(mono.simple == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(lagrangian_system(face(5, "MOABCD")).roots.empty());
  CHECK(lagrangian_system(face(5, "MA")).roots.size() == 24);
}

TEST_CASE("counts of -2 classes") {
  auto c = count_symplectic_minus2(kMono);
  CHECK(c.n_omega == 0);
  CHECK(c.n_l == 20);
  c = count_symplectic_minus2(face(5, "MO"));
  CHECK(c.n_omega == 10);
  CHECK(c.n_l == 10);
  c = count_symplectic_minus2(face(5, "MOABCD"));
  CHECK(c.n_omega == 20);
  CHECK(c.n_l == 0);
}

TEST_CASE("random forms: N_omega + N_L = 20 and N_L is the positive root count") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const auto w = oracle::random_reduced_form(rng);
    const auto c = count_symplectic_minus2(w);
    CHECK(c.n_omega + c.n_l == 20);
    CHECK(dynkin_type(lagrangian_system(w).simple, 5).positive_root_count() == c.n_l);
  }
}

TEST_CASE("Torelli part") {
  CHECK(torelli_smcg(kMono) == TorelliGroup::MCG_S2_5);
  CHECK(torelli_smcg(face(5, "MA")) == TorelliGroup::MCG_S2_4);
  CHECK(torelli_smcg(face(5, "MB")) == TorelliGroup::Trivial);
  CHECK(count_symplectic_minus2(face(5, "MB")).n_omega == 13);
  CHECK(torelli_ab_rank(TorelliGroup::MCG_S2_5) == 5);
  CHECK(torelli_ab_rank(TorelliGroup::MCG_S2_4) == 2);
  CHECK(torelli_ab_rank(TorelliGroup::Trivial) == 0);
  CHECK(to_string(TorelliGroup::MCG_S2_4) == "MCG(S2,4)");
}

TEST_CASE("Torelli part is constant on each face") {
  std::mt19937_64 rng(31);
  for (const auto& f : FaceLabel::all(5)) {
    const auto a = torelli_smcg(sample_face(f, rng));
    const auto b = torelli_smcg(sample_face(f, rng));
    CAPTURE(f.str());
    CHECK(a == b);
    CHECK(a == torelli_smcg(sample_face(f)));
  }
}

TEST_CASE("pi_1 ranks") {
  CHECK(pi1_rank(face(5, "MA")) == 5);
  CHECK(pi1_rank(kMono) == 0);
  CHECK(pi1_rank(face(4, "MOABC")) == 10);
  CHECK(pi1_rank(face(3, "MAB")) == 5);
  CHECK(pi1_rank(face(4, "MOB")) == 8);
}

TEST_CASE("blow-up upper bound calculus") {
  const Rational q(1, 10);
  CHECK(blowup_pi1_upper_bound(base_x1(Rational(1, 2)), {q, q, q, q}) == 9);
  CHECK(blowup_pi1_upper_bound(base_s2xs2(true), {q, q, q, q}) == 8);
  CHECK(blowup_pi1_upper_bound(BaseSurface{"X2", 3, 3, std::nullopt}, {q, q, q}) == 12);
  // Three distinct sizes on the same base: 3 + 3 + 4 + 5.
  CHECK(blowup_pi1_upper_bound(BaseSurface{"X2", 3, 3, std::nullopt},
                               {Rational(1, 10), Rational(1, 11), Rational(1, 12)}) == 15);
  CHECK(blowup_pi1_upper_bound(base_cp2(), {}) == 0);
  CHECK_THROWS_AS(blowup_pi1_upper_bound(base_x1(Rational(1, 5)), {Rational(1, 5)}), PreconditionError);
  CHECK_THROWS_AS(blowup_pi1_upper_bound(base_cp2(), {Rational(0)}), PreconditionError);
}

TEST_CASE("face recipes on type-A faces") {
  const auto d = face_upper_bound(face(5, "MOABCD"));
  CHECK(d.blow_down == "E5");
  CHECK(d.base.pi1_rank == 10);
  CHECK(d.bound == 15);
  const auto c = face_upper_bound(face(5, "MC"));
  CHECK(c.blow_down == "E4,E5");
  CHECK(c.bound == 10);
  const auto o = face_upper_bound(face(5, "MO"));
  CHECK(o.bound == 5);
  CHECK(face_upper_bound(face(5, "MA")).bound == 9);

  int type_a = 0;
  for (const auto& f : FaceLabel::all(5)) {
    const auto w = sample_face(f);
    const auto t = dynkin_type(lagrangian_system(w).simple, 5);
    if (t.is_type_a()) {
      ++type_a;
      CHECK(verify_type_A_rank(w));
    } else {
      CHECK_THROWS_AS(verify_type_A_rank(w), PreconditionError);
    }
  }
  CHECK(type_a == 30);
}

TEST_CASE("full reports") {
  const auto m = full_report(kMono);
  CHECK(m.face.str() == "M");
  CHECK(m.gamma_l.str() == "D_5");
  CHECK(m.n_omega == 0);
  CHECK(m.n_l == 20);
  CHECK(m.torelli == TorelliGroup::MCG_S2_5);
  CHECK(m.weyl_order == 1920);
  CHECK(m.pi1_rank == 0);
  CHECK(m.packing == true);
  CHECK(m.balanced == true);

  const auto a = full_report(face(5, "MA"));
  CHECK(a.gamma_l.str() == "D_4");
  CHECK(a.n_omega == 8);
  CHECK(a.n_l == 12);
  CHECK(a.torelli == TorelliGroup::MCG_S2_4);
  CHECK(a.weyl_order == 192);
  CHECK(a.pi1_rank == 5);
  CHECK(a.balanced == true);

  const auto b = full_report(face(5, "MOAB"));
  CHECK(b.gamma_l.str() == "A_2");
  CHECK(b.n_omega == 17);
  CHECK(b.n_l == 3);
  CHECK(b.torelli == TorelliGroup::Trivial);
  CHECK(b.weyl_order == 6);
  CHECK(b.pi1_rank == 12);
  CHECK(b.pi0_quotient() == "W(A_2)");

  const auto small = full_report(form("1|1/2,1/3"));
  CHECK_FALSE(small.torelli.has_value());
  CHECK_THROWS_AS(full_report(form("1|1/8,1/2,1/8,1/8,1/8")), PreconditionError);
}
