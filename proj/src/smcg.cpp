#include "rsurf/smcg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rsurf/braid.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

namespace rsurf {

namespace {

void require_reduced(const SymplecticVector& w) {
  if (const auto why = reduced_violation(w)) {
    throw PreconditionError("not a reduced form: " + *why);
  }
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string family_letter(DynkinFamily f) {
  switch (f) {
    case DynkinFamily::A: return "A";
    case DynkinFamily::D: return "D";
    case DynkinFamily::E: return "E";
  }
  return "?";
}

// Arm lengths from the branch node of a tree component, sorted.
std::vector<int> arm_lengths(int centre, const std::map<int, std::vector<int>>& adj) {
  std::vector<int> arms;
  for (int start : adj.at(centre)) {
    int prev = centre, cur = start, len = 1;
    while (true) {
      const auto& nb = adj.at(cur);
      if (nb.size() > 2) throw PreconditionError("Dynkin subdiagram with two branch nodes");
      int next = -1;
      for (int x : nb) {
        if (x != prev) next = x;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

DynkinComponent classify_component(const std::vector<int>& nodes, const std::map<int, std::vector<int>>& adj) {
  std::size_t edges = 0;
  std::vector<int> branch;
  for (int v : nodes) {
    edges += adj.at(v).size();
    if (adj.at(v).size() > 3) throw PreconditionError("Dynkin node of degree > 3");
    if (adj.at(v).size() == 3) branch.push_back(v);
  }
  const int n = static_cast<int>(nodes.size());
  if (edges / 2 != nodes.size() - 1) throw PreconditionError("Dynkin subdiagram contains a cycle");
  if (branch.empty()) return {DynkinFamily::A, n};
  if (branch.size() > 1) throw PreconditionError("Dynkin subdiagram with two branch nodes");
  const auto arms = arm_lengths(branch.front(), adj);
  if (arms[0] == 1 && arms[1] == 1) return {DynkinFamily::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {DynkinFamily::E, n};
  throw PreconditionError("Dynkin subdiagram of unsupported shape");
}

BaseSurface with_min_exceptional(BaseSurface base, const SymplecticVector& w) {
  Rational best = -1;
  for (const auto& e : enumerate_exceptional(w.k())) {
    const Rational s = area(w, e);
    if (best < 0 || s < best) best = s;
  }
  base.min_exceptional_area = best;
  return base;
}

SymplecticVector truncate(const SymplecticVector& w, int k) {
  return SymplecticVector(w.nu(), std::vector<Rational>(w.cs().begin(), w.cs().begin() + k));
}

}  // namespace

DynkinType::DynkinType(std::vector<DynkinComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    const bool ok = (c.family == DynkinFamily::A && c.rank >= 1) ||
                    (c.family == DynkinFamily::D && c.rank >= 4) ||
                    (c.family == DynkinFamily::E && c.rank >= 6 && c.rank <= 8);
    if (!ok) throw PreconditionError("invalid Dynkin component " + family_letter(c.family) + "_" + std::to_string(c.rank));
  }
  std::sort(components_.begin(), components_.end());
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

int DynkinType::positive_root_count() const {
  int total = 0;
  for (const auto& c : components_) {
    const int n = c.rank;
    switch (c.family) {
      case DynkinFamily::A: total += n * (n + 1) / 2; break;
      case DynkinFamily::D: total += n * (n - 1); break;
      case DynkinFamily::E: total += n == 6 ? 36 : n == 7 ? 63 : 120; break;
    }
  }
  return total;
}

bool DynkinType::is_type_a() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const DynkinComponent& c) { return c.family == DynkinFamily::A; });
}

std::string DynkinType::str() const {
  if (components_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "×";
    s += family_letter(components_[i].family) + "_" + std::to_string(components_[i].rank);
  }
  return s;
}

LagrangianSystem lagrangian_system(const SymplecticVector& w) {
  if (w.k() < 2) throw DimensionError("Lagrangian root system needs k >= 2");
  require_reduced(w);
  LagrangianSystem out;
  for (const auto& r : root_set(w.k())) {
    if (area(w, r) == 0) out.roots.push_back(r);
  }
  for (int i = (w.k() >= 3 ? 1 : 2); i <= w.k(); ++i) {
    if (area(w, simple_root(i, w.k())) == 0) out.simple.push_back(i);
  }
  return out;
}

DynkinType dynkin_type(const std::vector<int>& simple, int k) {
  std::map<int, std::vector<int>> adj;
  for (int i : simple) adj[i];
  for (int i : simple) {
    for (int j : simple) {
      if (i < j && pairing(simple_root(i, k), simple_root(j, k)) == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::set<int> seen;
  std::vector<DynkinComponent> comps;
  for (const auto& [start, _] : adj) {
    if (seen.count(start)) continue;
    std::vector<int> nodes, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int u : adj[v]) {
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
    comps.push_back(classify_component(nodes, adj));
  }
  return DynkinType(std::move(comps));
}

std::int64_t weyl_order(const DynkinType& t) {
  std::int64_t order = 1;
  for (const auto& c : t.components()) {
    switch (c.family) {
      case DynkinFamily::A: order *= factorial(c.rank + 1); break;
      case DynkinFamily::D: order *= (std::int64_t{1} << (c.rank - 1)) * factorial(c.rank); break;
      case DynkinFamily::E: order *= c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : 696729600; break;
    }
  }
  return order;
}

MinusTwoCounts count_symplectic_minus2(const SymplecticVector& w) {
  MinusTwoCounts out;
  for (const auto& r : positive_roots(w.k())) {
    const Rational s = area(w, r);
    if (s < 0) throw ConsistencyError(to_symbolic(r) + " has negative area; form was not reduced");
    if (s == 0) {
      ++out.n_l;
    } else {
      ++out.n_omega;
    }
  }
  return out;
}

std::string to_string(TorelliGroup t) {
  switch (t) {
    case TorelliGroup::Trivial: return "trivial";
    case TorelliGroup::MCG_S2_4: return "MCG(S2,4)";
    case TorelliGroup::MCG_S2_5: return "MCG(S2,5)";
  }
  return "?";
}

TorelliGroup torelli_smcg(const SymplecticVector& w) {
  if (w.k() != 5) throw DimensionError("Torelli SMCG is computed for k = 5");
  require_reduced(w);
  const int n = count_symplectic_minus2(w).n_omega;
  if (n > 8) return TorelliGroup::Trivial;
  if (n == 8) return TorelliGroup::MCG_S2_4;
  if (n == 0) return TorelliGroup::MCG_S2_5;
  throw ConsistencyError("no reduced k = 5 form has N = " + std::to_string(n));
}

int torelli_ab_rank(TorelliGroup t) {
  switch (t) {
    case TorelliGroup::Trivial: return 0;
    case TorelliGroup::MCG_S2_4: return braid::pure_braid_ab_rank(4, true).free_rank;
    case TorelliGroup::MCG_S2_5: return braid::pure_braid_ab_rank(5, true).free_rank;
  }
  return 0;
}

int pi1_rank(const SymplecticVector& w) {
  if (w.k() < 2 || w.k() > 5) throw DimensionError("pi_1 rank is computed for 2 <= k <= 5");
  require_reduced(w);
  const int n = count_symplectic_minus2(w).n_omega;
  switch (w.k()) {
    case 5: return n - 5 + torelli_ab_rank(torelli_smcg(w));
    case 4: return n;
    default: return n + 2;
  }
}

BaseSurface base_cp2() { return {"CP2", 0, 1, std::nullopt}; }

BaseSurface base_x1(const Rational& c1) {
  if (!(c1 > 0 && c1 < 1)) throw PreconditionError("X_1 form needs 0 < c_1 < 1");
  return {"X1", 1, 2, c1};
}

BaseSurface base_s2xs2(bool monotone) {
  return {monotone ? "S2xS2 monotone" : "S2xS2", monotone ? 0 : 1, 2, std::nullopt};
}

BaseSurface base_blowup(const SymplecticVector& w) {
  if (w.k() < 2 || w.k() > 4) throw DimensionError("blow-up base tables cover k = 2, 3, 4");
  const std::string name = "X" + std::to_string(w.k()) + " " + classify_face(w).str();
  return with_min_exceptional({name, pi1_rank(w), w.k() + 1, std::nullopt}, w);
}

int blowup_pi1_upper_bound(const BaseSurface& base, const std::vector<Rational>& sizes) {
  std::vector<Rational> sorted = sizes;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (const auto& s : sorted) {
    if (!(s > 0)) throw PreconditionError("blow-up sizes must be positive");
    if (base.min_exceptional_area && !(s < *base.min_exceptional_area)) {
      throw PreconditionError("blow-up size " + to_string(s) + " is not below the least exceptional area " +
                              to_string(*base.min_exceptional_area) + " of " + base.name);
    }
  }
  int rank = base.pi1_rank;
  int r = base.b2;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const int m = static_cast<int>(j - i);
    rank += m * r;
    r += m;
    i = j;
  }
  return rank;
}

UpperBoundCase face_upper_bound(const SymplecticVector& form) {
  if (form.k() != 5) throw DimensionError("the blow-down recipe is for k = 5");
  const SymplecticVector w = form.normalized();
  const FaceLabel face = classify_face(w);
  UpperBoundCase out;
  if (face.contains(5)) {
    out.blow_down = "E5";
    out.base = base_blowup(truncate(w, 4));
    out.sizes = {w.c(5)};
  } else if (face.contains(4)) {
    out.blow_down = "E4,E5";
    out.base = base_blowup(truncate(w, 3));
    out.sizes = {w.c(4), w.c(5)};
  } else if (face.contains(3) && face.contains(1)) {
    out.blow_down = "E3,E4,E5";
    out.base = base_blowup(truncate(w, 2));
    out.sizes = {w.c(3), w.c(4), w.c(5)};
  } else if (face.contains(3)) {
    // lambda = 1, so E'_1 = H - E_1 - E_2 has area c_3 like E_3, E_4, E_5,
    // and blowing all four down leaves S^2 x S^2 with areas (1 - c_2, 1 - c_1).
    out.blow_down = "E'1,E3,E4,E5";
    out.base = base_s2xs2(face.contains(2) ? false : true);
    out.sizes = {1 - w.c(1) - w.c(2), w.c(3), w.c(4), w.c(5)};
  } else if (face.contains(2)) {
    out.blow_down = "E2,E3,E4,E5";
    out.base = base_x1(w.c(1));
    out.sizes = {w.c(2), w.c(3), w.c(4), w.c(5)};
  } else if (face.contains(1)) {
    out.blow_down = "E1,E2,E3,E4,E5";
    out.base = base_cp2();
    out.sizes = {w.c(1), w.c(2), w.c(3), w.c(4), w.c(5)};
  } else {
    throw PreconditionError("no blow-down recipe for the monotone point");
  }
  out.bound = blowup_pi1_upper_bound(out.base, out.sizes);
  return out;
}

bool verify_type_A_rank(const SymplecticVector& w) {
  const auto sys = lagrangian_system(w.normalized());
  const DynkinType t = dynkin_type(sys.simple, w.k());
  if (!t.is_type_a()) throw PreconditionError("face is of type " + t.str() + ", not type A");
  const int n = count_symplectic_minus2(w.normalized()).n_omega;
  return face_upper_bound(w).bound == n - 5 && pi1_rank(w.normalized()) == n - 5;
}

std::string SMCGReport::pi0_kernel() const {
  return torelli ? to_string(*torelli) : std::string("not computed");
}

std::string SMCGReport::pi0_quotient() const { return "W(" + gamma_l.str() + ")"; }

SMCGReport full_report(const SymplecticVector& form) {
  if (form.k() < 2 || form.k() > 5) throw DimensionError("reports are produced for 2 <= k <= 5");
  const SymplecticVector w = form.normalized();
  require_reduced(w);
  const auto sys = lagrangian_system(w);
  const auto counts = count_symplectic_minus2(w);
  SMCGReport r{classify_face(w), dynkin_type(sys.simple, w.k()), counts.n_omega, counts.n_l, 1, 0,
               std::nullopt, std::nullopt, std::nullopt};
  if (r.gamma_l.positive_root_count() != counts.n_l ||
      static_cast<std::size_t>(2 * counts.n_l) != sys.roots.size()) {
    throw ConsistencyError("Dynkin type " + r.gamma_l.str() + " does not match the zero-area roots");
  }
  r.weyl_order = weyl_order(r.gamma_l);
  r.pi1_rank = pi1_rank(w);
  if (w.k() == 5) {
    r.torelli = torelli_smcg(w);
    r.packing = is_packing_form(w);
    r.balanced = is_balanced(w);
  }
  return r;
}

}  // namespace rsurf
