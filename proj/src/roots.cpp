#include "rsurf/roots.hpp"

#include <algorithm>
#include <cmath>

#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"

namespace rsurf {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Appends every (a; b) with sum(b) == target_sum and sum(b^2) == target_sq.
void enumerate_tails(int k, std::int64_t a, std::int64_t target_sum, std::int64_t target_sq,
                     std::vector<std::int64_t>& prefix, std::vector<HomologyClass>& out) {
  const int placed = static_cast<int>(prefix.size()) - 1;
  const int remaining = k - placed;
  if (remaining == 0) {
    if (target_sum == 0 && target_sq == 0) out.emplace_back(prefix);
    return;
  }
  // Cauchy-Schwarz on what is left: (sum)^2 <= remaining * (sum of squares).
  if (target_sq < 0 || target_sum * target_sum > remaining * target_sq) return;
  const std::int64_t bound = isqrt(target_sq);
  for (std::int64_t b = -bound; b <= bound; ++b) {
    prefix.push_back(b);
    enumerate_tails(k, a, target_sum - b, target_sq - b * b, prefix, out);
    prefix.pop_back();
  }
}

// All classes with A.A = square and A.K = k_pairing. With A = aH - sum b_i E_i
// these read sum b_i^2 = a^2 - square and sum b_i = 3a + k_pairing.
// Cauchy-Schwarz (sum b_i)^2 <= k sum b_i^2 then gives
//   (9 - k) a^2 + 6 p a + p^2 + k s <= 0        (p = k_pairing, s = square),
// a quadratic with positive leading coefficient for k <= 8. For roots this is
// a^2 <= 2k / (9 - k); for exceptional classes (3a - 1)^2 <= k (a^2 + 1).
std::vector<HomologyClass> enumerate_by_square(int k, std::int64_t square, std::int64_t k_pairing) {
  const std::int64_t lead = 9 - k;
  const std::int64_t mid = 6 * k_pairing;
  const std::int64_t tail = k_pairing * k_pairing + k * square;
  const double disc = static_cast<double>(mid * mid - 4 * lead * tail);
  std::vector<HomologyClass> out;
  if (disc < 0) return out;
  const double root = std::sqrt(disc);
  const auto lo = static_cast<std::int64_t>(std::floor((-mid - root) / (2.0 * lead))) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil((-mid + root) / (2.0 * lead))) + 1;
  for (std::int64_t a = lo; a <= hi; ++a) {
    if (lead * a * a + mid * a + tail > 0) continue;  // exact integer recheck
    const std::int64_t sum = 3 * a + k_pairing;
    const std::int64_t sq = a * a - square;
    std::vector<std::int64_t> prefix{a};
    enumerate_tails(k, a, sum, sq, prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_root_range(int k) {
  if (k < 3 || k > kMaxBlowups) {
    throw DimensionError("root system R_k is defined here for 3 <= k <= 8, got k=" +
                         std::to_string(k));
  }
}

}  // namespace

HomologyClass simple_root(int i, int k) {
  if (i < 1 || i > k || (i == 1 && k < 3)) {
    throw DimensionError("simple root l_" + std::to_string(i) + " undefined for k=" +
                         std::to_string(k));
  }
  if (i == 1) {
    return HomologyClass::line(k) - HomologyClass::exceptional(1, k) -
           HomologyClass::exceptional(2, k) - HomologyClass::exceptional(3, k);
  }
  return HomologyClass::exceptional(i - 1, k) - HomologyClass::exceptional(i, k);
}

std::vector<HomologyClass> simple_roots(int k) {
  std::vector<HomologyClass> out;
  for (int i = (k >= 3 ? 1 : 2); i <= k; ++i) out.push_back(simple_root(i, k));
  return out;
}

bool is_root(const HomologyClass& x) {
  return pairing(x, x) == -2 && pairing(x, canonical_class(x.k())) == 0;
}

std::vector<HomologyClass> root_set(int k) { return enumerate_by_square(k, -2, 0); }

RootDatum enumerate_roots(int k) {
  check_root_range(k);
  return RootDatum{k, root_set(k), simple_roots(k)};
}

std::vector<HomologyClass> enumerate_exceptional(int k) {
  if (k < kMinBlowups || k > kMaxBlowups) {
    throw DimensionError("exceptional classes enumerated for 1 <= k <= 8, got k=" +
                         std::to_string(k));
  }
  // K.A = -1 means sum b_i = 3a - 1.
  return enumerate_by_square(k, -1, -1);
}

std::vector<std::int64_t> root_coordinates(const HomologyClass& x) {
  if (!is_root(x)) {
    throw PreconditionError(to_symbolic(x) + " is not a root");
  }
  const int k = x.k();
  // With x = sum_i t_i l_i and l_1 = (1; 1,1,1,0..), l_i = E_{i-1} - E_i:
  //   a = t_1,  b_j = t_1 [j <= 3] + t_j [j >= 2] - t_{j+1}  (t_{k+1} = 0),
  // which is solved front to back; the j = k equation is the consistency check.
  std::vector<std::int64_t> t(static_cast<std::size_t>(k) + 2, 0);
  t[1] = k >= 3 ? x.a() : 0;
  if (k < 3 && x.a() != 0) throw ConsistencyError("root with H term for k < 3");
  for (int j = 1; j < k; ++j) {
    const std::int64_t from_l1 = (j <= 3) ? t[1] : 0;
    const std::int64_t from_lj = (j >= 2) ? t[static_cast<std::size_t>(j)] : 0;
    t[static_cast<std::size_t>(j) + 1] = from_l1 + from_lj - x.b(j);
  }
  const std::int64_t last = ((k <= 3) ? t[1] : 0) + (k >= 2 ? t[static_cast<std::size_t>(k)] : 0);
  if (last != x.b(k)) throw ConsistencyError("root not in the span of simple roots");
  return {t.begin() + 1, t.begin() + 1 + k};
}

bool is_positive_root(const HomologyClass& x) {
  const auto t = root_coordinates(x);
  return std::all_of(t.begin(), t.end(), [](std::int64_t v) { return v >= 0; });
}

std::vector<HomologyClass> positive_roots(int k) {
  if (k < 2 || k > kMaxBlowups) {
    throw DimensionError("positive roots need 2 <= k <= 8, got k=" + std::to_string(k));
  }
  std::vector<HomologyClass> out;
  for (const auto& r : root_set(k)) {
    const auto t = root_coordinates(r);
    const bool nonneg = std::all_of(t.begin(), t.end(), [](auto v) { return v >= 0; });
    const bool nonpos = std::all_of(t.begin(), t.end(), [](auto v) { return v <= 0; });
    if (!nonneg && !nonpos) throw ConsistencyError("root with mixed-sign coordinates");
    if (nonneg) out.push_back(r);
  }
  return out;
}

std::string to_string(SphereFamily f) {
  switch (f) {
    case SphereFamily::Section: return "section";
    case SphereFamily::Fiber: return "fiber";
    case SphereFamily::Exceptional: return "exceptional";
    case SphereFamily::NotListed: return "not-listed";
  }
  return "?";
}

SphereClassification classify_negative_sphere_class(const BFVector& v) {
  const auto is_int = [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; };
  if (!is_int(v.mu) || !is_int(v.f) ||
      !std::all_of(v.a.begin(), v.a.end(), is_int)) {
    throw PreconditionError("sphere classification needs an integral class");
  }
  Rational square = 2 * v.mu * v.f;
  for (const auto& r : v.a) square -= r * r;
  if (square >= 0) {
    throw PreconditionError("sphere classification needs a negative square class");
  }
  const auto zero_one = [](const Rational& r) { return r == 0 || r == 1; };
  if (v.mu == 1 && v.f <= 1 && std::all_of(v.a.begin(), v.a.end(), zero_one)) {
    return {SphereFamily::Section, boost::multiprecision::numerator(Rational(-v.f)).convert_to<std::int64_t>()};
  }
  if (v.mu == 0 && v.f == 1 && std::all_of(v.a.begin(), v.a.end(), zero_one)) {
    return {SphereFamily::Fiber, 0};
  }
  if (v.mu == 0 && v.f == 0) {
    // E'_j appears with coefficient +1, i.e. a_j = -1, and nothing before j.
    auto lead = std::find_if(v.a.begin(), v.a.end(), [](const Rational& r) { return r != 0; });
    if (lead != v.a.end() && *lead == -1 && std::all_of(lead + 1, v.a.end(), zero_one)) {
      return {SphereFamily::Exceptional, static_cast<std::int64_t>(lead - v.a.begin()) + 1};
    }
  }
  return {SphereFamily::NotListed, 0};
}

SphereClassification classify_negative_sphere_class(const HomologyClass& x) {
  if (pairing(x, x) >= 0) {
    throw PreconditionError("sphere classification needs a negative square class");
  }
  return classify_negative_sphere_class(to_bf_basis(x));
}

HomologyClass min_area_exceptional(const SymplecticVector& w) {
  if (const auto why = reduced_violation(w)) {
    throw PreconditionError("form is not reduced: " + *why);
  }
  const auto classes = enumerate_exceptional(w.k());
  Rational best = area(w, classes.front());
  for (const auto& e : classes) best = std::min(best, area(w, e));
  const auto last = HomologyClass::exceptional(w.k(), w.k());
  if (area(w, last) != best) {
    throw ConsistencyError("E_k is not area-minimal on a reduced form");
  }
  return last;
}

}  // namespace rsurf
