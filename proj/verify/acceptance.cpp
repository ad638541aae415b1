#include "acceptance.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rsurf/braid.hpp"
#include "rsurf/cone.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/roots.hpp"
#include "rsurf/smcg.hpp"
#include "rsurf/tables.hpp"

namespace rsurf::acceptance {

namespace {

// Collects the first failure; later failures only bump the counter.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  CriterionResult result(int id, std::string name, const std::string& summary) const {
    CriterionResult r{id, std::move(name), failures_ == 0, {}};
    r.detail = failures_ == 0 ? summary
                              : std::to_string(failures_) + "/" + std::to_string(checks_) +
                                    " checks failed; first: " + first_;
    return r;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

SymplecticVector chamber_point() { return sample_face(FaceLabel::parse(5, "MOABCD")); }

std::vector<std::string> table_lines(std::string_view md) {
  std::vector<std::string> out;
  std::istringstream in{std::string(md)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '|') out.push_back(line);
  }
  return out;
}

int parse_rank(const std::string& cell) {
  if (cell == "trivial") return 0;
  if (cell == "Z") return 1;
  if (cell.rfind("Z^", 0) == 0) return std::stoi(cell.substr(2));
  return -1;
}

std::vector<FaceLabel> type_a_faces() {
  std::vector<FaceLabel> out;
  for (const auto& f : FaceLabel::all(5)) {
    const auto sys = lagrangian_system(sample_face(f));
    if (dynkin_type(sys.simple, 5).is_type_a()) out.push_back(f);
  }
  return out;
}

}  // namespace

CriterionResult root_cardinalities(const Options&) {
  Tally t;
  const int expected[] = {8, 20, 40, 72, 126, 240};
  std::string counts;
  for (int k = 3; k <= 8; ++k) {
    const auto roots = enumerate_roots(k).roots;
    const auto orbit = oracle::root_orbit(k);
    const std::set<HomologyClass> got(roots.begin(), roots.end());
    t.expect(static_cast<int>(roots.size()) == expected[k - 3],
             "|R_" + std::to_string(k) + "| = " + std::to_string(roots.size()));
    t.expect(got == orbit, "R_" + std::to_string(k) + " differs from the reflection orbit");
    counts += (k > 3 ? "," : "") + std::to_string(roots.size());
  }
  return t.result(1, "root cardinalities", "|R_k| = " + counts + " for k=3..8, equal to reflection orbits");
}

CriterionResult table_k5_reproduction(const Options&) {
  Tally t;
  const Table golden = parse_markdown_table(5, golden_markdown(5));
  const Table got = regenerate_table(5);
  const auto orbit = oracle::root_orbit(5);
  const auto chamber = chamber_point();
  int n_ok = 0, type_ok = 0, whitelisted = 0;
  t.expect(golden.rows.size() == 32 && got.rows.size() == 32, "table does not have 32 rows");
  for (std::size_t i = 0; i < golden.rows.size() && i < got.rows.size(); ++i) {
    const auto& g = golden.rows[i];
    const auto& c = got.rows[i];
    const auto w = sample_face(FaceLabel::parse(5, g.face));
    const int oracle_n = oracle::positive_area_count(w, orbit, chamber);
    const bool n_match = c.n_omega == g.n_omega && std::to_string(oracle_n) == g.n_omega;
    t.expect(n_match, g.face + ": N = " + c.n_omega + " (oracle " + std::to_string(oracle_n) + "), expected " +
                          g.n_omega);
    n_ok += n_match;
    if (c.gamma_l == g.gamma_l) {
      ++type_ok;
    } else {
      const SMCGReport r = full_report(w);
      const bool allowed = g.face == "MC" && r.gamma_l.positive_root_count() == r.n_l && r.n_omega + r.n_l == 20;
      t.expect(allowed, g.face + ": Γ_L = " + c.gamma_l + ", expected " + g.gamma_l);
      whitelisted += allowed;
    }
  }
  t.expect(whitelisted == 1 && type_ok == 31, "expected 31 exact Γ_L matches plus the MC cell");
  return t.result(2, "table k=5 reproduction",
                  "N " + std::to_string(n_ok) + "/32, Γ_L " + std::to_string(type_ok) + "/32 exact + MC (A_1×A_1×A_2, N+N_L=20)");
}

CriterionResult small_tables_reproduction(const Options&) {
  Tally t;
  int rows = 0;
  for (int k = 2; k <= 4; ++k) {
    const Table got = regenerate_table(k);
    const auto want_lines = table_lines(golden_markdown(k));
    const auto got_lines = table_lines(render_markdown(got));
    t.expect(want_lines == got_lines, "table k=" + std::to_string(k) + " differs from golden bytes");
    for (const auto& m : compare_with_golden(got)) {
      t.expect(false, "k=" + std::to_string(k) + " " + m.face + " " + m.column + ": " + m.actual + " vs " + m.expected);
    }
    const int offset = k == 4 ? 0 : 2;
    for (const auto& r : got.rows) {
      ++rows;
      t.expect(parse_rank(r.pi1) == std::stoi(r.n_omega) + offset,
               "k=" + std::to_string(k) + " " + r.face + ": rank " + r.pi1 + " vs N " + r.n_omega);
    }
  }
  return t.result(3, "tables k=2,3,4 reproduction",
                  std::to_string(rows) + " rows byte-identical; rank = N (k=4), N+2 (k=2,3)");
}

CriterionResult smcg_outputs(const Options&) {
  Tally t;
  const auto mono = full_report(sample_face(FaceLabel::parse(5, "M")));
  t.expect(mono.torelli == TorelliGroup::MCG_S2_5, "monotone Torelli is not MCG(S2,5)");
  t.expect(mono.gamma_l.str() == "D_5" && mono.weyl_order == 1920, "monotone W is not D_5 of order 1920");
  const auto ma = full_report(sample_face(FaceLabel::parse(5, "MA")));
  t.expect(ma.torelli == TorelliGroup::MCG_S2_4, "MA Torelli is not MCG(S2,4)");
  t.expect(ma.gamma_l.str() == "D_4" && ma.weyl_order == 192, "MA W is not D_4 of order 192");
  int type_a = 0;
  for (const auto& f : FaceLabel::all(5)) {
    const auto w = sample_face(f);
    const auto r = full_report(w);
    const auto sys = lagrangian_system(w);
    t.expect(r.weyl_order == oracle::weyl_orbit_order(sys.simple, 5), f.str() + ": Weyl order disagrees with orbit");
    if (!r.gamma_l.is_type_a()) continue;
    ++type_a;
    t.expect(r.torelli == TorelliGroup::Trivial, f.str() + ": Torelli not trivial");
  }
  t.expect(type_a == 30, std::to_string(type_a) + " type-A faces instead of 30");
  return t.result(4, "Torelli and Weyl outputs",
                  "M: MCG(S2,5), |W(D_5)|=1920; MA: MCG(S2,4), |W(D_4)|=192; 30 type-A faces trivial Torelli");
}

CriterionResult rank_equality(const Options&) {
  Tally t;
  const int ab4 = braid::pure_braid_ab_rank(4, true).free_rank;
  const int ab5 = braid::pure_braid_ab_rank(5, true).free_rank;
  t.expect(torelli_ab_rank(TorelliGroup::Trivial) == 0, "ab rank of trivial group");
  t.expect(torelli_ab_rank(TorelliGroup::MCG_S2_4) == ab4 && ab4 == 2, "ab rank MCG(S2,4) = " + std::to_string(ab4));
  t.expect(torelli_ab_rank(TorelliGroup::MCG_S2_5) == ab5 && ab5 == 5, "ab rank MCG(S2,5) = " + std::to_string(ab5));
  for (const auto& f : FaceLabel::all(5)) {
    const auto r = full_report(sample_face(f));
    t.expect(r.pi1_rank == r.n_omega - 5 + torelli_ab_rank(*r.torelli), f.str() + ": rank equality fails");
  }
  t.expect(full_report(sample_face(FaceLabel::parse(5, "MA"))).pi1_rank == 5, "MA rank is not 5");
  t.expect(full_report(sample_face(FaceLabel::parse(5, "M"))).pi1_rank == 0, "monotone rank is not 0");
  return t.result(5, "rank equality", "32/32 faces; Smith ranks 0/2/5; MA -> 5, M -> 0");
}

CriterionResult braid_abelianizations(const Options&) {
  Tally t;
  t.expect(braid::pure_braid_ab_rank(5, true).free_rank == 5, "PB_5(S2)/Z2 rank");
  t.expect(braid::pure_braid_ab_rank(4, true).free_rank == 2, "PB_4(S2)/Z2 rank");
  t.expect(braid::forgetting_rank_check(), "3 + 2 != 5");
  t.expect(braid::check_generating_in_ab({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, 5, true),
           "{A12,A13,A14,A23,A24} does not span");
  t.expect(braid::check_generating_in_ab({{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, 5, true),
           "{A13,A14,A15,A23,A24,A25} does not span");
  const braid::Word rel = braid::surface_relation(4, 5);
  const braid::Word want{braid::pair_generator(1, 4, 5), braid::pair_generator(2, 4, 5),
                         braid::pair_generator(3, 4, 5), braid::pair_generator(4, 5, 5)};
  t.expect(rel == want, "surface relation j=4 is not A14 A24 A34 A45");
  std::vector<std::int64_t> row(10, 0);
  for (int g : rel) row[static_cast<std::size_t>(g - 1)] += 1;
  std::vector<std::int64_t> incidence;
  for (auto [i, j] : braid::pair_list(5)) incidence.push_back(i == 4 || j == 4);
  t.expect(row == incidence, "A14 A24 A34 A45 does not abelianize to the j=4 incidence row");
  return t.result(6, "braid abelianizations",
                  "PB_5/Z2 -> Z^5, PB_4/Z2 -> Z^2, 3+2=5, both generating sets span, j=4 row ok");
}

CriterionResult reduction_soundness(const Options& opt) {
  Tally t;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> entry(-10, 10);
  const HomologyClass K = canonical_class(5);
  int done = 0;
  while (done < opt.random_classes) {
    std::vector<std::int64_t> v(6);
    for (auto& x : v) x = entry(rng);
    const HomologyClass x(v);
    if (pairing(x, x) <= 0) continue;
    ++done;
    const auto tr = reduce(x);
    const auto& y = tr.output;
    t.expect(oracle::relaxed_reduced(y), to_string(x) + " reduced to non-reduced " + to_string(y));
    t.expect(pairing(y, y) == pairing(x, x), to_string(x) + ": square changed");
    // Permutations and Cremona moves lie in the Weyl group and fix K; a flip
    // of E_i moves x.K by -2 b_i and negation reverses its sign.
    HomologyClass cur = x;
    for (const auto& m : tr.steps) {
      const HomologyClass next = apply_move(cur, m);
      std::int64_t want = pairing(cur, K);
      if (const auto* f = std::get_if<SignFlip>(&m)) want -= 2 * cur.b(f->index);
      if (std::holds_alternative<Negation>(m)) want = -want;
      t.expect(pairing(next, K) == want, to_string(x) + ": K-pairing changed by " + to_string(m));
      cur = next;
    }
    t.expect(reduce(y).output == y && reduce(y).steps.empty(), to_string(x) + ": reduction not idempotent");
    t.expect(replay(x, tr.steps) == y, to_string(x) + ": trace replay mismatch");
  }
  const auto part = oracle::orbit_partition(opt.bfs_bound);
  std::vector<int> reduced_count(static_cast<std::size_t>(part.components), 0);
  std::vector<const HomologyClass*> rep(static_cast<std::size_t>(part.components), nullptr);
  for (std::size_t n = 0; n < part.classes.size(); ++n) {
    if (oracle::relaxed_reduced(part.classes[n])) {
      const auto c = static_cast<std::size_t>(part.component[n]);
      ++reduced_count[c];
      rep[c] = &part.classes[n];
    }
  }
  for (int c = 0; c < part.components; ++c) {
    t.expect(reduced_count[static_cast<std::size_t>(c)] == 1,
             "orbit component with " + std::to_string(reduced_count[static_cast<std::size_t>(c)]) +
                 " reduced classes");
  }
  for (std::size_t n = 0; n < part.classes.size(); ++n) {
    const auto* r = rep[static_cast<std::size_t>(part.component[n])];
    t.expect(r && reduce(part.classes[n]).output == *r,
             to_string(part.classes[n]) + ": canonical form differs from orbit oracle");
  }
  return t.result(7, "Cremona reduction soundness",
                  std::to_string(done) + " random classes; " + std::to_string(part.classes.size()) +
                      " boxed classes in " + std::to_string(part.components) + " orbits match the oracle");
}

CriterionResult balanced_to_packing_check(const Options& opt) {
  Tally t;
  std::mt19937_64 rng(opt.seed + 1);
  int done = 0, skipped = 0;
  while (done < opt.random_forms) {
    // Alternate open-chamber draws with draws from random faces so the
    // boundary strata are exercised too.
    SymplecticVector w = (done + skipped) % 2 == 0
                             ? oracle::random_reduced_form(rng)
                             : sample_face(FaceLabel::all(5)[rng() % 32], rng);
    if (!is_balanced(w)) {
      ++skipped;
      continue;
    }
    ++done;
    int i = 1;
    while (!(w.c(i) < w.c(i + 1) + w.c(i + 2))) ++i;
    const auto p = balanced_to_packing(w);
    const auto want = oracle::cremona_formula(w, i).normalized();
    t.expect(p.form == want, to_string(w) + ": Cremona image differs from the explicit formula");
    t.expect(oracle::packing_inequalities(p.form), to_string(w) + " -> " + to_string(p.form) + " is not packing");
  }
  return t.result(8, "balanced forms map to packing forms",
                  std::to_string(done) + " balanced reduced forms satisfy both strict inequalities");
}

CriterionResult upper_bound_calculus(const Options&) {
  Tally t;
  const auto faces = type_a_faces();
  for (const auto& f : faces) {
    const auto w = sample_face(f);
    const auto c = face_upper_bound(w);
    const int n = count_symplectic_minus2(w).n_omega;
    t.expect(verify_type_A_rank(w) && c.bound == n - 5,
             f.str() + ": bound " + std::to_string(c.bound) + " vs N-5 = " + std::to_string(n - 5));
  }
  t.expect(faces.size() == 30, std::to_string(faces.size()) + " type-A faces");
  const auto ma = sample_face(FaceLabel::parse(5, "MA"));
  const int ma_bound = face_upper_bound(ma).bound;
  t.expect(ma_bound == 9, "MA bound " + std::to_string(ma_bound));
  t.expect(pi1_rank(ma) == 5 && 5 <= ma_bound, "MA rank 5 exceeds its bound");
  return t.result(9, "upper-bound calculus", "30/30 type-A faces bound = N-5; MA bound 9 >= rank 5");
}

CriterionResult base_change_round_trip(const Options& opt) {
  Tally t;
  std::mt19937_64 rng(opt.seed + 2);
  const auto roots = enumerate_roots(5).roots;
  const auto probes = enumerate_exceptional(5);
  for (int n = 0; n < opt.random_forms; ++n) {
    const SymplecticVector w =
        n % 2 == 0 ? oracle::random_reduced_form(rng) : sample_face(FaceLabel::all(5)[rng() % 32], rng);
    const BFVector bf = to_bf_basis(w);
    t.expect(form_from_bf_basis(bf) == w, to_string(w) + ": BF round trip");
    for (const auto& x : probes) {
      const BFVector cx = to_bf_basis(x);
      t.expect(class_from_bf_basis(cx) == x, to_symbolic(x) + ": class BF round trip");
      // x = mu B + f F - sum a_i E'_i, so its area is linear in the BF areas.
      Rational a = cx.mu * bf.mu + cx.f * bf.f;
      for (std::size_t i = 0; i < cx.a.size(); ++i) a -= cx.a[i] * bf.a[i];
      t.expect(a == area(w, x), to_symbolic(x) + ": area differs in BF coordinates");
    }
    const auto counts = count_symplectic_minus2(w);
    t.expect(counts.n_omega + counts.n_l == 20, to_string(w) + ": N + N_L != 20");
  }
  return t.result(10, "base change and N + N_L",
                  std::to_string(opt.random_forms) + " reduced forms: BF round trip, BF areas, N + N_L = 20");
}

std::vector<CriterionResult> run_all(const Options& opt) {
  using Fn = std::function<CriterionResult(const Options&)>;
  const std::vector<std::pair<std::string, Fn>> all{
      {"root cardinalities", root_cardinalities},
      {"table k=5 reproduction", table_k5_reproduction},
      {"tables k=2,3,4 reproduction", small_tables_reproduction},
      {"Torelli and Weyl outputs", smcg_outputs},
      {"rank equality", rank_equality},
      {"braid abelianizations", braid_abelianizations},
      {"Cremona reduction soundness", reduction_soundness},
      {"balanced forms map to packing forms", balanced_to_packing_check},
      {"upper-bound calculus", upper_bound_calculus},
      {"base change and N + N_L", base_change_round_trip},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      out.push_back(all[i].second(opt));
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(i) + 1, all[i].first, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace rsurf::acceptance
