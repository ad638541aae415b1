#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsurf/rational.hpp"

namespace rsurf {

inline constexpr int kMinBlowups = 1;
inline constexpr int kMaxBlowups = 8;

/// An integral class aH - b_1 E_1 - ... - b_k E_k in H_2 of CP^2 # k(-CP^2).
///
/// Stored as (a; b_1..b_k), so H - E_i - E_j has b_i = b_j = 1 while E_i
/// itself has b_i = -1. The intersection form is
/// diag(1, -1, ..., -1) on the basis H, E_1, ..., E_k.
class HomologyClass {
 public:
  // coeffs = (a, b_1, ..., b_k); throws DimensionError unless 1 <= k <= 8.
  explicit HomologyClass(std::vector<std::int64_t> coeffs);

  static HomologyClass zero(int k);
  static HomologyClass line(int k);                  // H
  static HomologyClass exceptional(int i, int k);    // E_i, 1-based

  int k() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t a() const { return coeffs_[0]; }
  // 1-based; b(i) is minus the E_i coefficient.
  std::int64_t b(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  HomologyClass operator-() const;
  HomologyClass operator+(const HomologyClass& other) const;
  HomologyClass operator-(const HomologyClass& other) const;
  HomologyClass operator*(std::int64_t scale) const;

  auto operator<=>(const HomologyClass&) const = default;
  bool operator==(const HomologyClass&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Cohomology datum (nu | c_1, ..., c_k) of a symplectic form: nu is the area
/// of H and c_i the area of E_i.
class SymplecticVector {
 public:
  // Throws DimensionError for k outside 1..8 and PreconditionError if nu <= 0.
  SymplecticVector(Rational nu, std::vector<Rational> c);

  int k() const { return static_cast<int>(c_.size()); }
  const Rational& nu() const { return nu_; }
  const Rational& c(int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Rational> cs() const { return c_; }

  // Rescaled so that nu == 1.
  SymplecticVector normalized() const;

  bool operator==(const SymplecticVector&) const = default;

 private:
  Rational nu_;
  std::vector<Rational> c_;
};

/// Coordinates in the S^2 x S^2 # (k-1) basis B, F, E'_1, ..., E'_{k-1}:
///   B = H - E_2, F = H - E_1, E'_1 = H - E_1 - E_2, E'_i = E_{i+1}.
/// For a homology class these are coefficients of mu B + f F - sum a_i E'_i;
/// for a symplectic vector they are the areas of B, F and E'_i.
struct BFVector {
  Rational mu;
  Rational f;
  std::vector<Rational> a;  // a_1 .. a_{k-1}

  bool operator==(const BFVector&) const = default;
};

std::int64_t pairing(const HomologyClass& x, const HomologyClass& y);

// K = -3H + E_1 + ... + E_k, stored as (-3; -1, ..., -1).
HomologyClass canonical_class(int k);

Rational area(const SymplecticVector& w, const HomologyClass& x);

// Both conversions require k >= 2: E'_1 involves E_2.
BFVector to_bf_basis(const HomologyClass& x);
BFVector to_bf_basis(const SymplecticVector& w);
// Throws PreconditionError if the coefficients are not integral.
HomologyClass class_from_bf_basis(const BFVector& v);
// Throws PreconditionError if the resulting area of H is not positive.
SymplecticVector form_from_bf_basis(const BFVector& v);

// Divides the areas by omega(F) so that f == 1. For forms this gives
//   mu = (nu - c_2)/(nu - c_1), a_1 = (nu - c_1 - c_2)/(nu - c_1),
//   a_i = c_{i+1}/(nu - c_1).
// Throws PreconditionError when f == 0 (nu == c_1, class on a wall).
BFVector normalize_bf(const BFVector& v);

// Text forms: "a;b1,...,bk" for classes and "nu|c1,...,ck" for forms.
HomologyClass parse_class(std::string_view text);
SymplecticVector parse_form(std::string_view text);
std::string to_string(const HomologyClass& x);
std::string to_string(const SymplecticVector& w);
// Symbolic rendering such as "2H-E1-E2-E3".
std::string to_symbolic(const HomologyClass& x);

std::ostream& operator<<(std::ostream& os, const HomologyClass& x);
std::ostream& operator<<(std::ostream& os, const SymplecticVector& w);

}  // namespace rsurf
