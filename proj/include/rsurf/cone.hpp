#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rsurf/lattice.hpp"

namespace rsurf {

/// Open face of the normalized reduced cone P_k, named by the simple roots
/// l_i that pair positively with its forms. Vertex G_i of P_k is lettered
/// O, A, B, C, D, E, F, G for i = 1..8 and the face is "M" followed by the
/// letters of its positive set. For k = 2 the two strata are "OB" (c_1 = c_2)
/// and "BOA" (c_1 != c_2).
class FaceLabel {
 public:
  // positive: sorted subset of 1..k (subset of {2} when k = 2).
  FaceLabel(int k, std::vector<int> positive);

  static FaceLabel parse(int k, std::string_view text);
  // Every face of P_k in the row order used by the tables: by dimension,
  // then lexicographically in vertex order O < A < B < ...
  static std::vector<FaceLabel> all(int k);

  int k() const { return k_; }
  const std::vector<int>& positive() const { return positive_; }
  bool contains(int i) const;
  std::string str() const;

  auto operator<=>(const FaceLabel&) const = default;

 private:
  int k_;
  std::vector<int> positive_;
};

char vertex_letter(int i);

// M_k = (1|1/3..1/3) followed by G_1..G_k. Requires 3 <= k <= 8.
std::vector<SymplecticVector> vertices(int k);

// Normalizes to nu = 1 and requires strict reducedness; throws
// PreconditionError naming the violated inequality otherwise. Supports
// 2 <= k <= 8.
FaceLabel classify_face(const SymplecticVector& w);

// Deterministic interior point: barycentric weight 10 on M and 10 + i on
// G_i, i.e. the simplex midpoint with a small rational perturbation.
SymplecticVector sample_face(const FaceLabel& label);
// Random interior point with positive integer barycentric weights.
SymplecticVector sample_face(const FaceLabel& label, std::mt19937_64& rng);

// Reduces first; a strictly reduced result is representable, and for
// k <= 2 additionally nu > c_1 + c_2 is required.
bool is_representable(const SymplecticVector& w);

}  // namespace rsurf
