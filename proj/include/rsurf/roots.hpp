#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsurf/lattice.hpp"

namespace rsurf {

/// The root system R_k = {A : A.A = -2, A.K = 0} with its simple roots
/// l_1 = H - E_1 - E_2 - E_3 and l_i = E_{i-1} - E_i (i >= 2).
struct RootDatum {
  int k = 0;
  std::vector<HomologyClass> roots;   // sorted ascending
  std::vector<HomologyClass> simple;  // l_1 .. l_k
};

// Simple root l_i, 1-based. l_1 needs k >= 3.
HomologyClass simple_root(int i, int k);
std::vector<HomologyClass> simple_roots(int k);

bool is_root(const HomologyClass& x);

// Complete enumeration for 3 <= k <= 8; |R_k| = 8, 20, 40, 72, 126, 240.
RootDatum enumerate_roots(int k);

// Same enumeration without the range check; k = 2 yields {+-(E_1 - E_2)}.
std::vector<HomologyClass> root_set(int k);

// All classes with square -1 and K-pairing -1, sorted.
std::vector<HomologyClass> enumerate_exceptional(int k);

std::vector<HomologyClass> positive_roots(int k);

// Coordinates of a root over l_1..l_k (or over l_2..l_k for k = 2, with a
// leading zero slot kept so index i always refers to l_i).
// Throws PreconditionError if x is not a root.
std::vector<std::int64_t> root_coordinates(const HomologyClass& x);

bool is_positive_root(const HomologyClass& x);

/// Negative-square spherical classes on S^2 x S^2 # n(-CP^2) written as
/// pB + qF - sum r_i E'_i.
enum class SphereFamily {
  Section,      // B - kF - sum r_i E'_i, k >= -1, r_i in {0,1}
  Fiber,        // F - sum r_i E'_i, r_i in {0,1}
  Exceptional,  // E'_j - sum_{i>j} r_i E'_i, r_i in {0,1}
  NotListed,
};

struct SphereClassification {
  SphereFamily family = SphereFamily::NotListed;
  // For Section: the k in B - kF. For Exceptional: the leading index j.
  std::int64_t parameter = 0;
};

std::string to_string(SphereFamily f);

// Input already in BF coordinates (integral mu, f, a_i).
SphereClassification classify_negative_sphere_class(const BFVector& v);
// Input in the H, E_i basis; converted with to_bf_basis first.
SphereClassification classify_negative_sphere_class(const HomologyClass& x);

// For a reduced form, the exceptional class of least area. Ties resolve to
// E_k, which always attains the minimum on reduced forms.
HomologyClass min_area_exceptional(const SymplecticVector& w);

}  // namespace rsurf
