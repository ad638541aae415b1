#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "rsurf/roots.hpp"

namespace rsurf::oracle {

namespace {

std::int64_t dot(const HomologyClass& x, const HomologyClass& y) {
  std::int64_t s = x.a() * y.a();
  for (int i = 1; i <= x.k(); ++i) s -= x.b(i) * y.b(i);
  return s;
}

HomologyClass mirror(const HomologyClass& x, const HomologyClass& r) {
  const std::int64_t d = dot(x, r);
  std::vector<std::int64_t> v(x.coeffs().begin(), x.coeffs().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += d * r.coeffs()[i];
  return HomologyClass(std::move(v));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

}  // namespace

std::set<HomologyClass> root_orbit(int k) {
  const auto simple = simple_roots(k);
  std::set<HomologyClass> seen(simple.begin(), simple.end());
  std::vector<HomologyClass> frontier(simple.begin(), simple.end());
  while (!frontier.empty()) {
    const HomologyClass x = frontier.back();
    frontier.pop_back();
    for (const auto& r : simple) {
      HomologyClass y = mirror(x, r);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

std::set<HomologyClass> roots_in_box(int k, int bound) {
  std::set<HomologyClass> out;
  const int side = 2 * bound + 1;
  std::int64_t total = 1;
  for (int i = 0; i <= k; ++i) total *= side;
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (auto& x : v) {
      x = c % side - bound;
      c /= side;
    }
    std::int64_t sum = 0, sq = 0;
    for (int i = 1; i <= k; ++i) {
      sum += v[static_cast<std::size_t>(i)];
      sq += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    // x.x = -2 and x.K = 0 for K = -3H + sum E_i.
    if (v[0] * v[0] - sq == -2 && 3 * v[0] - sum == 0) out.emplace(v);
  }
  return out;
}

std::int64_t weyl_orbit_order(const std::vector<int>& simple, int k) {
  const std::size_t n = simple.size();
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> cartan(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cartan[i][j] = i == j ? 2 : -dot(simple_root(simple[i], k), simple_root(simple[j], k));
    }
  }
  using Weight = std::vector<std::int64_t>;
  std::set<Weight> seen{Weight(n, 1)};
  std::vector<Weight> frontier{Weight(n, 1)};
  while (!frontier.empty()) {
    const Weight w = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Weight u = w;
      for (std::size_t j = 0; j < n; ++j) u[j] -= w[i] * cartan[i][j];
      if (seen.insert(u).second) frontier.push_back(std::move(u));
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

int positive_area_count(const SymplecticVector& w, const std::set<HomologyClass>& roots,
                        const SymplecticVector& chamber_point) {
  int n = 0;
  for (const auto& r : roots) {
    if (area(chamber_point, r) > 0 && area(w, r) > 0) ++n;
  }
  return n;
}

int zero_area_positive_count(const SymplecticVector& w, const std::set<HomologyClass>& roots,
                             const SymplecticVector& chamber_point) {
  int n = 0;
  for (const auto& r : roots) {
    if (area(chamber_point, r) > 0 && area(w, r) == 0) ++n;
  }
  return n;
}

OrbitPartition orbit_partition(int amax) {
  constexpr int k = 5;
  const int span = 2 * amax - 1;  // b in -(amax-1) .. amax-1
  const auto encode = [&](const std::vector<std::int64_t>& v) -> std::int64_t {
    if (v[0] < 1 || v[0] > amax) return -1;
    std::int64_t code = v[0] - 1;
    for (int i = 1; i <= k; ++i) {
      const std::int64_t b = v[static_cast<std::size_t>(i)];
      if (b <= -amax || b >= amax) return -1;
      code = code * span + (b + amax - 1);
    }
    return code;
  };
  std::int64_t total = amax;
  for (int i = 0; i < k; ++i) total *= span;
  std::vector<int> index(static_cast<std::size_t>(total), -1);

  OrbitPartition out;
  std::vector<std::vector<std::int64_t>> vecs;
  std::vector<std::int64_t> v(k + 1);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (int i = k; i >= 1; --i) {
      v[static_cast<std::size_t>(i)] = c % span - (amax - 1);
      c /= span;
    }
    v[0] = c + 1;
    std::int64_t sq = v[0] * v[0];
    for (int i = 1; i <= k; ++i) sq -= v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    if (sq <= 0) continue;
    index[static_cast<std::size_t>(code)] = static_cast<int>(vecs.size());
    vecs.push_back(v);
  }

  UnionFind uf(vecs.size());
  const auto link = [&](int from, const std::vector<std::int64_t>& to) {
    const std::int64_t code = encode(to);
    if (code < 0) return;
    const int j = index[static_cast<std::size_t>(code)];
    if (j >= 0) uf.unite(from, j);
  };
  for (std::size_t n = 0; n < vecs.size(); ++n) {
    const auto& x = vecs[n];
    const int id = static_cast<int>(n);
    for (int i = 1; i <= k; ++i) {
      auto y = x;
      y[static_cast<std::size_t>(i)] = -y[static_cast<std::size_t>(i)];
      link(id, y);
    }
    for (int i = 1; i < k; ++i) {
      auto y = x;
      std::swap(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i) + 1]);
      link(id, y);
    }
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        for (int l = j + 1; l <= k; ++l) {
          auto y = x;
          const std::int64_t d = x[0] - x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)] -
                                 x[static_cast<std::size_t>(l)];
          y[0] += d;
          y[static_cast<std::size_t>(i)] += d;
          y[static_cast<std::size_t>(j)] += d;
          y[static_cast<std::size_t>(l)] += d;
          link(id, y);
        }
      }
    }
  }

  std::map<int, int> ids;
  for (std::size_t n = 0; n < vecs.size(); ++n) {
    const int root = uf.find(static_cast<int>(n));
    const auto it = ids.emplace(root, static_cast<int>(ids.size())).first;
    out.classes.emplace_back(vecs[n]);
    out.component.push_back(it->second);
  }
  out.components = static_cast<int>(ids.size());
  return out;
}

bool relaxed_reduced(const HomologyClass& x) {
  const int k = x.k();
  if (x.a() < x.b(1)) return false;
  for (int i = 1; i < k; ++i) {
    if (x.b(i) < x.b(i + 1)) return false;
  }
  if (x.b(k) < 0) return false;
  return k < 3 || x.a() >= x.b(1) + x.b(2) + x.b(3);
}

SymplecticVector random_reduced_form(std::mt19937_64& rng, int scale) {
  std::uniform_int_distribution<int> upper(scale / 4, scale - 1);
  while (true) {
    std::uniform_int_distribution<int> entry(1, upper(rng));
    std::vector<int> c(5);
    for (auto& x : c) x = entry(rng);
    std::sort(c.begin(), c.end(), std::greater<>());
    if (c[0] + c[1] + c[2] > scale || c[0] >= scale) continue;
    std::vector<Rational> cs;
    for (int x : c) cs.emplace_back(x, scale);
    return SymplecticVector(Rational(1), std::move(cs));
  }
}

SymplecticVector cremona_formula(const SymplecticVector& w, int i) {
  const Rational s = w.c(i) + w.c(i + 1) + w.c(i + 2);
  std::vector<Rational> c(w.cs().begin(), w.cs().end());
  for (int t = i; t <= i + 2; ++t) c[static_cast<std::size_t>(t - 1)] = w.nu() - (s - w.c(t));
  return SymplecticVector(2 * w.nu() - s, std::move(c));
}

bool packing_inequalities(const SymplecticVector& w) {
  Rational sum = 0;
  for (const auto& c : w.cs()) {
    if (!(c < w.nu() / 2)) return false;
    sum += c;
  }
  return sum < 2 * w.nu();
}

}  // namespace rsurf::oracle
