#pragma once

// Independent reference computations. None of these call the engine routine
// they are used to check: roots come from reflection orbits instead of the
// quadratic-bound enumeration, Weyl orders from orbit counting instead of the
// closed formulas, and canonical class representatives from a union-find over
// a finite box instead of the greedy reduction.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rsurf/lattice.hpp"

namespace rsurf::oracle {

// Closure of the simple roots under the simple reflections.
std::set<HomologyClass> root_orbit(int k);

// Brute force over the box |a|, |b_i| <= bound.
std::set<HomologyClass> roots_in_box(int k, int bound);

// |W| as the orbit size of a regular weight, using the Cartan matrix
// 2 delta_ij - (l_i . l_j)-adjacency of the given simple roots.
std::int64_t weyl_orbit_order(const std::vector<int>& simple, int k);

// Positive roots of the given orbit, read off from a form in the open
// chamber (every simple root of positive area).
int positive_area_count(const SymplecticVector& w, const std::set<HomologyClass>& roots,
                        const SymplecticVector& chamber_point);
int zero_area_positive_count(const SymplecticVector& w, const std::set<HomologyClass>& roots,
                             const SymplecticVector& chamber_point);

// Union-find over all k = 5 classes with 1 <= a <= amax and positive square
// (which forces |b_i| < a). Edges are single sign flips, adjacent swaps and
// Cremona reflections on any three indices whose image stays in the set.
struct OrbitPartition {
  std::vector<HomologyClass> classes;
  std::vector<int> component;  // component id per class
  int components = 0;
};

OrbitPartition orbit_partition(int amax);

// a >= b_1 >= ... >= b_5 >= 0 and a >= b_1 + b_2 + b_3, checked directly.
bool relaxed_reduced(const HomologyClass& x);

// Random strictly reduced k = 5 form; numerators bounded by `scale`.
SymplecticVector random_reduced_form(std::mt19937_64& rng, int scale = 1000);

// Cremona image in H - E_i - E_{i+1} - E_{i+2} computed from the explicit
// formula nu' = 2nu - c_i - c_j - c_k, c_t' = nu - c_u - c_v.
SymplecticVector cremona_formula(const SymplecticVector& w, int i);

bool packing_inequalities(const SymplecticVector& w);

}  // namespace rsurf::oracle
