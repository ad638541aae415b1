#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsurf/lattice.hpp"

namespace rsurf {

// New E_m is old E_{source[m-1]}; indices are 1-based.
struct Permutation {
  std::vector<int> source;
  bool operator==(const Permutation&) const = default;
};

// E_index -> -E_index.
struct SignFlip {
  int index = 0;
  bool operator==(const SignFlip&) const = default;
};

// Reflection in the root H - E_i - E_j - E_k.
struct CremonaMove {
  int i = 0, j = 0, k = 0;
  bool operator==(const CremonaMove&) const = default;
};

// x -> -x; realized by complex conjugation, used only to make a > 0.
struct Negation {
  bool operator==(const Negation&) const = default;
};

using Move = std::variant<Permutation, SignFlip, CremonaMove, Negation>;

struct ReductionTrace {
  HomologyClass input;
  HomologyClass output;
  std::vector<Move> steps;
};

struct FormReductionTrace {
  SymplecticVector input;
  SymplecticVector output;
  std::vector<Move> steps;
};

// s_r(x) = x + (x.r) r. Throws PreconditionError unless r.r = -2 and r.K = 0.
HomologyClass reflect(const HomologyClass& x, const HomologyClass& r);
// Pulls the form back along s_r: new areas are omega(s_r(H)), omega(s_r(E_i)).
SymplecticVector reflect(const SymplecticVector& w, const HomologyClass& r);

HomologyClass apply_move(const HomologyClass& x, const Move& m);
SymplecticVector apply_move(const SymplecticVector& w, const Move& m);
HomologyClass replay(const HomologyClass& x, const std::vector<Move>& steps);
SymplecticVector replay(const SymplecticVector& w, const std::vector<Move>& steps);

// Brings a positive-square class into the closed reduced chamber
//   a >= b_1 >= ... >= b_k >= 0,  a >= b_1 + b_2 + b_3
// using sign flips, sorting and the Cremona reflection on the three largest
// entries. Throws PreconditionError if x.x <= 0.
ReductionTrace reduce(const HomologyClass& x);
// Same algorithm over exact rationals. Throws PreconditionError if the
// square nu^2 - sum c_i^2 is not positive.
FormReductionTrace reduce(const SymplecticVector& w);

// Strict reducedness: nu > c_1 >= ... >= c_k > 0 and nu >= c_1 + c_2 + c_3.
// Returns the first violated inequality, or nullopt.
std::optional<std::string> reduced_violation(const SymplecticVector& w);
std::optional<std::string> reduced_violation(const HomologyClass& x);
bool is_reduced(const SymplecticVector& w);
bool is_reduced(const HomologyClass& x);
// Closed chamber targeted by reduce(): c_k >= 0 and nu >= c_1 allowed.
bool is_reduced_relaxed(const HomologyClass& x);
bool is_reduced_relaxed(const SymplecticVector& w);

// c_i < nu/2 for all i and sum c_i < 2 nu. Requires k = 5.
bool is_packing_form(const SymplecticVector& w);

// Smallest i in 1..3 with c_i < c_{i+1} + c_{i+2}, if any. Requires a
// reduced form with k = 5.
std::optional<int> balanced_index(const SymplecticVector& w);
bool is_balanced(const SymplecticVector& w);

struct PackingTransform {
  SymplecticVector form;  // normalized to nu = 1
  CremonaMove move;
};

// Applies the Cremona reflection in H - E_i - E_{i+1} - E_{i+2} at the first
// balanced index; the image is a standard packing form. Throws
// PreconditionError if w is not reduced and balanced.
PackingTransform balanced_to_packing(const SymplecticVector& w);

std::string to_string(const Move& m);

}  // namespace rsurf
