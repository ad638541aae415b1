#include "rsurf/cremona.hpp"

#include <algorithm>
#include <numeric>

#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

namespace rsurf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Coefficient arrays (a, b_1, .., b_k) shared by classes and forms; both use
// the convention x = aH - sum b_i E_i.
template <class T>
using Coeffs = std::vector<T>;

Coeffs<std::int64_t> coeffs_of(const HomologyClass& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

Coeffs<Rational> coeffs_of(const SymplecticVector& w) {
  Coeffs<Rational> out{w.nu()};
  out.insert(out.end(), w.cs().begin(), w.cs().end());
  return out;
}

HomologyClass rebuild(const HomologyClass&, Coeffs<std::int64_t> v) { return HomologyClass(std::move(v)); }

SymplecticVector rebuild(const SymplecticVector&, Coeffs<Rational> v) {
  Rational nu = v.front();
  v.erase(v.begin());
  return SymplecticVector(std::move(nu), std::move(v));
}

void check_index(int i, int k) {
  if (i < 1 || i > k) {
    throw PreconditionError("E-index " + std::to_string(i) + " out of range for k=" + std::to_string(k));
  }
}

template <class T>
void apply_in_place(Coeffs<T>& v, const Move& m) {
  const int k = static_cast<int>(v.size()) - 1;
  std::visit(
      overloaded{
          [&](const Permutation& p) {
            if (static_cast<int>(p.source.size()) != k) {
              throw PreconditionError("permutation length does not match k");
            }
            std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
            Coeffs<T> out = v;
            for (int m_idx = 1; m_idx <= k; ++m_idx) {
              const int src = p.source[static_cast<std::size_t>(m_idx - 1)];
              check_index(src, k);
              if (seen[static_cast<std::size_t>(src)]++) throw PreconditionError("not a permutation");
              out[static_cast<std::size_t>(m_idx)] = v[static_cast<std::size_t>(src)];
            }
            v = std::move(out);
          },
          [&](const SignFlip& f) {
            check_index(f.index, k);
            v[static_cast<std::size_t>(f.index)] = -v[static_cast<std::size_t>(f.index)];
          },
          [&](const CremonaMove& c) {
            check_index(c.i, k);
            check_index(c.j, k);
            check_index(c.k, k);
            if (c.i == c.j || c.j == c.k || c.i == c.k) {
              throw PreconditionError("Cremona move needs three distinct indices");
            }
            // Reflection in r = H - E_i - E_j - E_k: x.r = a - b_i - b_j - b_k and
            // x + (x.r) r has a' = 2a - b_i - b_j - b_k, b'_t = a - (sum of the other two).
            const auto i = static_cast<std::size_t>(c.i);
            const auto j = static_cast<std::size_t>(c.j);
            const auto l = static_cast<std::size_t>(c.k);
            const T d = v[0] - v[i] - v[j] - v[l];
            v[0] += d;
            v[i] += d;
            v[j] += d;
            v[l] += d;
          },
          [&](const Negation&) {
            for (auto& x : v) x = -x;
          },
      },
      m);
}

template <class T>
bool relaxed_chamber(const Coeffs<T>& v) {
  const int k = static_cast<int>(v.size()) - 1;
  if (v[0] < v[1]) return false;
  for (int i = 1; i < k; ++i) {
    if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i) + 1]) return false;
  }
  if (v[static_cast<std::size_t>(k)] < 0) return false;
  if (k >= 3 && v[0] < v[1] + v[2] + v[3]) return false;
  return true;
}

template <class T>
std::optional<std::string> strict_violation(const Coeffs<T>& v) {
  using std::to_string;
  using rsurf::to_string;
  const int k = static_cast<int>(v.size()) - 1;
  const auto at = [&](int i) -> const T& { return v[static_cast<std::size_t>(i)]; };
  const auto c = [](int i) { return "c_" + std::to_string(i); };
  if (!(at(0) > at(1))) {
    return "nu > c_1 fails (nu=" + to_string(at(0)) + ", c_1=" + to_string(at(1)) + ")";
  }
  for (int i = 1; i < k; ++i) {
    if (at(i) < at(i + 1)) {
      return c(i) + " >= " + c(i + 1) + " fails (" + to_string(at(i)) + " < " + to_string(at(i + 1)) + ")";
    }
  }
  if (!(at(k) > 0)) {
    return c(k) + " > 0 fails (" + c(k) + "=" + to_string(at(k)) + ")";
  }
  if (k >= 3 && at(0) < at(1) + at(2) + at(3)) {
    return "nu >= c_1 + c_2 + c_3 fails (nu=" + to_string(at(0)) +
           ", c_1+c_2+c_3=" + to_string(at(1) + at(2) + at(3)) + ")";
  }
  return std::nullopt;
}

// Reduction loop shared by classes and forms.
//
// Termination: flips and permutations leave a unchanged, and the Cremona
// step is only taken when a < b_1 + b_2 + b_3, where it maps
//   a -> a' = 2a - (b_1 + b_2 + b_3) < a.
// Reflections preserve the square and the component of the positive cone, so
// a stays positive, and all entries stay in (1/D)Z for the common
// denominator D of the input. A strictly decreasing positive sequence in
// (1/D)Z is finite.
template <class T>
std::vector<Move> reduce_coeffs(Coeffs<T>& v) {
  const int k = static_cast<int>(v.size()) - 1;
  std::vector<Move> steps;
  if (v[0] < 0) {
    steps.emplace_back(Negation{});
    apply_in_place(v, steps.back());
  }
  while (true) {
    for (int i = 1; i <= k; ++i) {
      if (v[static_cast<std::size_t>(i)] < 0) {
        steps.emplace_back(SignFlip{i});
        apply_in_place(v, steps.back());
      }
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)];
    });
    if (!std::is_sorted(order.begin(), order.end())) {
      steps.emplace_back(Permutation{order});
      apply_in_place(v, steps.back());
    }
    if (k >= 3 && v[0] < v[1] + v[2] + v[3]) {
      steps.emplace_back(CremonaMove{1, 2, 3});
      apply_in_place(v, steps.back());
      if (!(v[0] > 0)) throw ConsistencyError("Cremona step left the positive cone");
      continue;
    }
    return steps;
  }
}

}  // namespace

HomologyClass reflect(const HomologyClass& x, const HomologyClass& r) {
  if (!is_root(r)) {
    throw PreconditionError(to_symbolic(r) + " is not a root (need r.r = -2 and r.K = 0)");
  }
  return x + r * pairing(x, r);
}

SymplecticVector reflect(const SymplecticVector& w, const HomologyClass& r) {
  if (!is_root(r)) {
    throw PreconditionError(to_symbolic(r) + " is not a root (need r.r = -2 and r.K = 0)");
  }
  const int k = w.k();
  const Rational nu = area(w, reflect(HomologyClass::line(k), r));
  std::vector<Rational> c;
  // New c_i is the area of s_r(E_i).
  for (int i = 1; i <= k; ++i) c.push_back(area(w, reflect(HomologyClass::exceptional(i, k), r)));
  return SymplecticVector(nu, std::move(c));
}

HomologyClass apply_move(const HomologyClass& x, const Move& m) {
  auto v = coeffs_of(x);
  apply_in_place(v, m);
  return rebuild(x, std::move(v));
}

SymplecticVector apply_move(const SymplecticVector& w, const Move& m) {
  auto v = coeffs_of(w);
  apply_in_place(v, m);
  return rebuild(w, std::move(v));
}

HomologyClass replay(const HomologyClass& x, const std::vector<Move>& steps) {
  auto v = coeffs_of(x);
  for (const auto& m : steps) apply_in_place(v, m);
  return rebuild(x, std::move(v));
}

SymplecticVector replay(const SymplecticVector& w, const std::vector<Move>& steps) {
  auto v = coeffs_of(w);
  for (const auto& m : steps) apply_in_place(v, m);
  return rebuild(w, std::move(v));
}

ReductionTrace reduce(const HomologyClass& x) {
  if (pairing(x, x) <= 0) {
    throw PreconditionError("reduction needs positive square, got " + std::to_string(pairing(x, x)));
  }
  auto v = coeffs_of(x);
  auto steps = reduce_coeffs(v);
  return ReductionTrace{x, rebuild(x, std::move(v)), std::move(steps)};
}

FormReductionTrace reduce(const SymplecticVector& w) {
  Rational square = w.nu() * w.nu();
  for (const auto& c : w.cs()) square -= c * c;
  if (square <= 0) {
    throw PreconditionError("reduction needs positive square, got " + to_string(square));
  }
  auto v = coeffs_of(w);
  auto steps = reduce_coeffs(v);
  return FormReductionTrace{w, rebuild(w, std::move(v)), std::move(steps)};
}

std::optional<std::string> reduced_violation(const SymplecticVector& w) {
  return strict_violation(coeffs_of(w));
}

std::optional<std::string> reduced_violation(const HomologyClass& x) {
  return strict_violation(coeffs_of(x));
}

bool is_reduced(const SymplecticVector& w) { return !reduced_violation(w); }
bool is_reduced(const HomologyClass& x) { return !reduced_violation(x); }
bool is_reduced_relaxed(const HomologyClass& x) { return relaxed_chamber(coeffs_of(x)); }
bool is_reduced_relaxed(const SymplecticVector& w) { return relaxed_chamber(coeffs_of(w)); }

bool is_packing_form(const SymplecticVector& w) {
  if (w.k() != 5) throw DimensionError("packing forms are defined for k = 5");
  Rational sum = 0;
  for (const auto& c : w.cs()) {
    if (!(2 * c < w.nu())) return false;
    sum += c;
  }
  return sum < 2 * w.nu();
}

std::optional<int> balanced_index(const SymplecticVector& w) {
  if (w.k() != 5) throw DimensionError("balanced forms are defined for k = 5");
  if (const auto why = reduced_violation(w)) {
    throw PreconditionError("balance needs a reduced form: " + *why);
  }
  for (int i = 1; i <= 3; ++i) {
    if (w.c(i) < w.c(i + 1) + w.c(i + 2)) return i;
  }
  return std::nullopt;
}

bool is_balanced(const SymplecticVector& w) { return balanced_index(w).has_value(); }

PackingTransform balanced_to_packing(const SymplecticVector& w) {
  const auto i = balanced_index(w);
  if (!i) {
    throw PreconditionError("form is not balanced: c_i >= c_{i+1} + c_{i+2} for i = 1, 2, 3");
  }
  const CremonaMove move{*i, *i + 1, *i + 2};
  const SymplecticVector image = apply_move(w, move).normalized();
  if (!is_packing_form(image)) {
    throw ConsistencyError("Cremona image of a balanced form is not a packing form");
  }
  return PackingTransform{image, move};
}

std::string to_string(const Move& m) {
  return std::visit(
      overloaded{
          [](const Permutation& p) {
            std::string s = "perm(";
            for (std::size_t i = 0; i < p.source.size(); ++i) {
              s += (i ? "," : "") + std::to_string(p.source[i]);
            }
            return s + ")";
          },
          [](const SignFlip& f) { return "flip(" + std::to_string(f.index) + ")"; },
          [](const CremonaMove& c) {
            return "cremona(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                   std::to_string(c.k) + ")";
          },
          [](const Negation&) { return std::string("negate"); },
      },
      m);
}

}  // namespace rsurf
