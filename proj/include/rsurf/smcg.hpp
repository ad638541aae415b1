#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsurf/cone.hpp"
#include "rsurf/lattice.hpp"

namespace rsurf {

enum class DynkinFamily { A, D, E };

struct DynkinComponent {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;
  auto operator<=>(const DynkinComponent&) const = default;
};

/// Isomorphism type of a simply laced root system, e.g. A_1 x A_3 or D_5.
class DynkinType {
 public:
  DynkinType() = default;  // trivial
  explicit DynkinType(std::vector<DynkinComponent> components);

  const std::vector<DynkinComponent>& components() const { return components_; }
  bool trivial() const { return components_.empty(); }
  int rank() const;
  int positive_root_count() const;
  bool is_type_a() const;
  // "trivial", "D_5", "A_1×A_3" (components sorted A < D < E, then by rank).
  std::string str() const;

  bool operator==(const DynkinType&) const = default;

 private:
  std::vector<DynkinComponent> components_;
};

struct LagrangianSystem {
  std::vector<HomologyClass> roots;  // zero-area roots, sorted
  std::vector<int> simple;           // i with area(l_i) == 0
};

// Requires a reduced form with 2 <= k <= 8.
LagrangianSystem lagrangian_system(const SymplecticVector& w);

// Components of the subdiagram of {l_i : i in simple} where l_i, l_j are
// joined when l_i . l_j == 1. Paths are A_n; a single branch node with arms
// (1,1,m) is D_{m+3}, with arms (1,2,2), (1,2,3), (1,2,4) it is E_6, E_7, E_8.
DynkinType dynkin_type(const std::vector<int>& simple, int k);

std::int64_t weyl_order(const DynkinType& t);

struct MinusTwoCounts {
  int n_omega = 0;  // positive roots of positive area
  int n_l = 0;      // positive roots of zero area
};

// Throws ConsistencyError if a positive root has negative area.
MinusTwoCounts count_symplectic_minus2(const SymplecticVector& w);

enum class TorelliGroup { Trivial, MCG_S2_4, MCG_S2_5 };

std::string to_string(TorelliGroup t);

// k = 5 only: N > 8 trivial, N == 8 MCG(S^2,4), N == 0 MCG(S^2,5).
TorelliGroup torelli_smcg(const SymplecticVector& w);

// Rank of the abelianization, computed from the pure braid presentations:
// PB_4(S^2)/Z_2 for MCG(S^2,4) and PB_5(S^2)/Z_2 for MCG(S^2,5).
int torelli_ab_rank(TorelliGroup t);

// k = 5: N - 5 + ab rank of the Torelli part; k = 4: N; k = 2, 3: N + 2.
int pi1_rank(const SymplecticVector& w);

/// A surface to blow up, with the data the upper-bound calculus consumes.
struct BaseSurface {
  std::string name;
  int pi1_rank = 0;
  int b2 = 0;
  // Least area of an exceptional class; empty when there are none.
  std::optional<Rational> min_exceptional_area;
};

BaseSurface base_cp2();
BaseSurface base_x1(const Rational& c1);  // (1|c1), non-monotone
BaseSurface base_s2xs2(bool monotone);
// Reduced forms on X_2, X_3, X_4 with rank from pi1_rank.
BaseSurface base_blowup(const SymplecticVector& w);

// Blow-ups grouped by equal size, largest first; a group of m equal sizes
// on a base with current b_2 = r adds m * r to the rank, then r += m.
// Throws PreconditionError if a size is not below the base's least
// exceptional area or is not positive.
int blowup_pi1_upper_bound(const BaseSurface& base, const std::vector<Rational>& sizes);

struct UpperBoundCase {
  std::string blow_down;  // e.g. "E5", "E'1,E3,E4,E5"
  BaseSurface base;
  std::vector<Rational> sizes;
  int bound = 0;
};

// Blow-down recipe for a reduced k = 5 form on any face except M.
UpperBoundCase face_upper_bound(const SymplecticVector& w);

// For a type-A face: the recipe's bound equals N - 5. Throws
// PreconditionError if the face is not of type A.
bool verify_type_A_rank(const SymplecticVector& w);

struct SMCGReport {
  FaceLabel face;
  DynkinType gamma_l;
  int n_omega = 0;
  int n_l = 0;
  std::int64_t weyl_order = 1;
  int pi1_rank = 0;
  // k = 5 only.
  std::optional<TorelliGroup> torelli;
  std::optional<bool> packing;
  std::optional<bool> balanced;

  // Symp_h extension: Torelli -> pi_0 -> W(Gamma_L).
  std::string pi0_kernel() const;
  std::string pi0_quotient() const;
};

// Requires a reduced form with 2 <= k <= 5; k = 5 fills the optional fields.
SMCGReport full_report(const SymplecticVector& w);

}  // namespace rsurf
