#include "rsurf/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "rsurf/errors.hpp"
#include "rsurf/rational.hpp"

namespace rsurf::braid {

namespace {

void check_strands(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw DimensionError("strand count must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                         ", got " + std::to_string(n));
  }
}

Word commutator_relator(const Word& x, const Word& y) {
  return free_reduce(concat(concat(x, y), concat(inverse(x), inverse(y))));
}

// Row operations on the pair (M, U) and column operations on (M, V).
struct Reducer {
  IntegerMatrix M, U, V;

  void swap_rows(int a, int b) {
    for (int c = 0; c < M.cols(); ++c) std::swap(M.at(a, c), M.at(b, c));
    for (int c = 0; c < U.cols(); ++c) std::swap(U.at(a, c), U.at(b, c));
  }
  void swap_cols(int a, int b) {
    for (int r = 0; r < M.rows(); ++r) std::swap(M.at(r, a), M.at(r, b));
    for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, a), V.at(r, b));
  }
  // row dst += q * row src
  void add_row(int dst, int src, std::int64_t q) {
    for (int c = 0; c < M.cols(); ++c) M.at(dst, c) += q * M.at(src, c);
    for (int c = 0; c < U.cols(); ++c) U.at(dst, c) += q * U.at(src, c);
  }
  void add_col(int dst, int src, std::int64_t q) {
    for (int r = 0; r < M.rows(); ++r) M.at(r, dst) += q * M.at(r, src);
    for (int r = 0; r < V.rows(); ++r) V.at(r, dst) += q * V.at(r, src);
  }
  void negate_row(int a) {
    for (int c = 0; c < M.cols(); ++c) M.at(a, c) = -M.at(a, c);
    for (int c = 0; c < U.cols(); ++c) U.at(a, c) = -U.at(a, c);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool pivot(int t) {
    int br = -1, bc = -1;
    std::int64_t best = 0;
    for (int r = t; r < M.rows(); ++r) {
      for (int c = t; c < M.cols(); ++c) {
        const std::int64_t v = std::abs(M.at(r, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (br < 0) return false;
    if (br != t) swap_rows(br, t);
    if (bc != t) swap_cols(bc, t);
    return true;
  }

  void run() {
    const int lim = std::min(M.rows(), M.cols());
    for (int t = 0; t < lim; ++t) {
      if (!pivot(t)) break;
      while (true) {
        bool clean = true;
        for (int r = t + 1; r < M.rows(); ++r) {
          if (M.at(r, t) != 0) add_row(r, t, -(M.at(r, t) / M.at(t, t)));
          if (M.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < M.cols(); ++c) {
          if (M.at(t, c) != 0) add_col(c, t, -(M.at(t, c) / M.at(t, t)));
          if (M.at(t, c) != 0) clean = false;
        }
        if (clean) {
          // Divisibility: fold an offending row into row t and go again.
          int bad = -1;
          for (int r = t + 1; r < M.rows() && bad < 0; ++r) {
            for (int c = t + 1; c < M.cols(); ++c) {
              if (M.at(r, c) % M.at(t, t) != 0) {
                bad = r;
                break;
              }
            }
          }
          if (bad < 0) break;
          add_row(t, bad, 1);
        }
        pivot(t);
      }
      if (M.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int g : w) {
    if (g == 0) throw std::invalid_argument("generator index 0 in word");
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  const int m = static_cast<int>(generators_.size());
  for (auto& r : relators) {
    for (int g : r) {
      if (g == 0 || std::abs(g) > m) {
        throw std::invalid_argument("relator uses generator " + std::to_string(g) + " of " +
                                    std::to_string(m));
      }
    }
    relators_.push_back(free_reduce(std::move(r)));
  }
}

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  IntegerMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

std::vector<std::int64_t> IntegerMatrix::row(int r) const {
  std::vector<std::int64_t> out;
  for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not compose");
  IntegerMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  }
  return out;
}

std::int64_t determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < a.size() && a[s][k] == 0) ++s;
      if (s == a.size()) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  BigInt d = a.back().back() * sign;
  return d.convert_to<std::int64_t>();
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D.at(i, i));
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer red{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  red.run();
  return SmithForm{std::move(red.U), std::move(red.M), std::move(red.V)};
}

std::string AbelianInvariants::str() const {
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
  return s.empty() ? "0" : s;
}

IntegerMatrix abelianized_relators(const FinitePresentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (int r = 0; r < m.rows(); ++r) {
    for (int g : p.relators()[static_cast<std::size_t>(r)]) m.at(r, std::abs(g) - 1) += g > 0 ? 1 : -1;
  }
  return m;
}

AbelianInvariants abelian_invariants(const IntegerMatrix& relations) {
  const auto snf = smith_normal_form(relations);
  AbelianInvariants out;
  int nonzero = 0;
  for (auto d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = relations.cols() - nonzero;
  return out;
}

AbelianInvariants abelianization(const FinitePresentation& p) {
  return abelian_invariants(abelianized_relators(p));
}

FinitePresentation sphere_braid_presentation(int n) {
  check_strands(n, 2, 64);
  std::vector<std::string> gens;
  for (int i = 1; i < n; ++i) gens.push_back("s" + std::to_string(i));
  std::vector<Word> rels;
  for (int i = 1; i + 1 < n; ++i) {
    rels.push_back(free_reduce({i, i + 1, i, -(i + 1), -i, -(i + 1)}));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) rels.push_back(commutator_relator({i}, {j}));
  }
  Word sphere;
  for (int i = 1; i < n; ++i) sphere.push_back(i);
  for (int i = n - 1; i >= 1; --i) sphere.push_back(i);
  rels.push_back(sphere);
  return FinitePresentation(std::move(gens), std::move(rels));
}

std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

int pair_generator(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw std::invalid_argument("no pair generator A_" + std::to_string(i) + "," + std::to_string(j));
  }
  // Pairs (1,2)..(1,n), (2,3).. precede (i, j).
  return (i - 1) * n - (i - 1) * i / 2 + (j - i);
}

Word pure_generator(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw std::invalid_argument("no pure braid generator A_" + std::to_string(i) + "," + std::to_string(j));
  }
  Word w;
  for (int t = j - 1; t > i; --t) w.push_back(t);
  w.push_back(i);
  w.push_back(i);
  for (int t = i + 1; t < j; ++t) w.push_back(-t);
  return w;
}

Word surface_relation(int j, int n) {
  if (j < 1 || j > n) throw std::invalid_argument("surface relation index out of range");
  Word w;
  for (int i = 1; i < j; ++i) w.push_back(pair_generator(i, j, n));
  for (int k = j + 1; k <= n; ++k) w.push_back(pair_generator(j, k, n));
  return w;
}

Word full_twist(int n) {
  Word w;
  for (int g = 1; g <= static_cast<int>(pair_list(n).size()); ++g) w.push_back(g);
  return w;
}

FinitePresentation pure_sphere_braid_presentation(int n, bool quotient_full_twist) {
  check_strands(n, 2, 64);
  const auto pairs = pair_list(n);
  std::vector<std::string> gens;
  for (auto [i, j] : pairs) gens.push_back("A" + std::to_string(i) + "," + std::to_string(j));
  const auto A = [n](int i, int j) { return Word{pair_generator(i, j, n)}; };
  const auto cat = [](std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  std::vector<Word> rels;
  // A_rs^-1 A_ij A_rs = (conjugate of A_ij), r < s < j, i < j.
  for (auto [r, s] : pairs) {
    for (auto [i, j] : pairs) {
      if (!(s < j)) continue;
      Word rhs;
      if (s < i || i < r) {
        rhs = A(i, j);
      } else if (s == i) {
        rhs = cat({A(r, j), A(i, j), inverse(A(r, j))});
      } else if (i == r) {
        rhs = cat({A(r, j), A(s, j), A(i, j), inverse(A(s, j)), inverse(A(r, j))});
      } else {  // r < i < s
        rhs = cat({A(r, j), A(s, j), inverse(A(r, j)), inverse(A(s, j)), A(i, j), A(s, j), A(r, j),
                   inverse(A(s, j)), inverse(A(r, j))});
      }
      rels.push_back(cat({inverse(A(r, s)), A(i, j), A(r, s), inverse(rhs)}));
    }
  }
  for (int j = 1; j <= n; ++j) rels.push_back(surface_relation(j, n));
  if (quotient_full_twist) rels.push_back(full_twist(n));
  return FinitePresentation(std::move(gens), std::move(rels));
}

IntegerMatrix pure_braid_relation_matrix(int n, bool quotient_full_twist) {
  check_strands(n, 2, 64);
  const int m = static_cast<int>(pair_list(n).size());
  IntegerMatrix out(n + (quotient_full_twist ? 1 : 0), m);
  for (int j = 1; j <= n; ++j) {
    for (int g : surface_relation(j, n)) out.at(j - 1, g - 1) += 1;
  }
  if (quotient_full_twist) {
    for (int c = 0; c < m; ++c) out.at(n, c) = 1;
  }
  return out;
}

AbelianInvariants pure_braid_ab_rank(int n, bool quotient_full_twist) {
  check_strands(n, 2, 6);
  return abelian_invariants(pure_braid_relation_matrix(n, quotient_full_twist));
}

int free_group_ab_rank(int r) {
  if (r < 0) throw std::invalid_argument("free group rank must be non-negative");
  std::vector<std::string> gens;
  for (int i = 1; i <= r; ++i) gens.push_back("x" + std::to_string(i));
  return abelianization(FinitePresentation(std::move(gens), {})).free_rank;
}

bool check_generating_in_ab(const std::vector<std::pair<int, int>>& candidates, int n,
                            bool quotient_full_twist) {
  // The images generate Z^m / R iff the candidate unit rows together with the
  // relation rows R span Z^m, i.e. the stacked matrix has Smith diagonal of
  // m ones.
  const IntegerMatrix rel = pure_braid_relation_matrix(n, quotient_full_twist);
  const int m = rel.cols();
  IntegerMatrix stacked(static_cast<int>(candidates.size()) + rel.rows(), m);
  int r = 0;
  for (auto [i, j] : candidates) stacked.at(r++, pair_generator(i, j, n) - 1) = 1;
  for (int q = 0; q < rel.rows(); ++q, ++r) {
    for (int c = 0; c < m; ++c) stacked.at(r, c) = rel.at(q, c);
  }
  const auto inv = abelian_invariants(stacked);
  return inv.free_rank == 0 && inv.torsion.empty();
}

bool ranks_additive(int kernel_rank, int quotient_rank, int total_rank) {
  return kernel_rank + quotient_rank == total_rank;
}

bool forgetting_rank_check() {
  return ranks_additive(free_group_ab_rank(3), pure_braid_ab_rank(4, true).free_rank,
                        pure_braid_ab_rank(5, true).free_rank);
}

std::string to_string(const Word& w, const std::string& letter) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += letter + std::to_string(std::abs(w[i]));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

}  // namespace rsurf::braid
