#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rsurf::braid {

// Signed 1-based generator indices; -g is the inverse of generator g.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);

// Generators plus freely reduced relator words.
class FinitePresentation {
 public:
  // Throws std::invalid_argument if a relator uses an undeclared generator.
  FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) { return data_[index(r, c)]; }
  std::int64_t at(int r, int c) const { return data_[index(r, c)]; }
  std::vector<std::int64_t> row(int r) const;

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Exact determinant of a square matrix (fraction-free elimination).
std::int64_t determinant(const IntegerMatrix& m);

// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

// Z^free_rank + sum Z/t for t in torsion (entries > 1 only).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
  std::string str() const;
  bool operator==(const AbelianInvariants&) const = default;
};

// One row per relator: exponent sum of each generator.
IntegerMatrix abelianized_relators(const FinitePresentation& p);
AbelianInvariants abelian_invariants(const IntegerMatrix& relations);
AbelianInvariants abelianization(const FinitePresentation& p);

// Artin generators sigma_1..sigma_{n-1} with the braid and commuting
// relations plus sigma_1 ... sigma_{n-1} sigma_{n-1} ... sigma_1 = 1.
FinitePresentation sphere_braid_presentation(int n);

// The pair generators A_ij, i < j, in lexicographic order; A_ji == A_ij.
std::vector<std::pair<int, int>> pair_list(int n);
// 1-based position of A_ij in pair_list(n).
int pair_generator(int i, int j, int n);

// A_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1.
Word pure_generator(int i, int j, int n);

// (prod_{i<j} A_ij)(prod_{k>j} A_jk), a word in pair generators.
Word surface_relation(int j, int n);

// Product of all A_ij, each once; abelianizes to the all-ones row.
Word full_twist(int n);

// Pair generators with the classical pure braid relations, the n surface
// relations and optionally the full twist as an extra relator.
FinitePresentation pure_sphere_braid_presentation(int n, bool quotient_full_twist);

// Rows: the n surface relations, then the full twist when requested.
IntegerMatrix pure_braid_relation_matrix(int n, bool quotient_full_twist);

// Abelianization of PB_n(S^2) (or PB_n(S^2)/<tau>) for 2 <= n <= 6.
AbelianInvariants pure_braid_ab_rank(int n, bool quotient_full_twist);

// Free group on r generators: abelianization rank r.
int free_group_ab_rank(int r);

// True iff the images of the candidate pair generators generate the
// abelianization over Z (necessary for generating the group itself).
bool check_generating_in_ab(const std::vector<std::pair<int, int>>& candidates, int n,
                            bool quotient_full_twist);

bool ranks_additive(int kernel_rank, int quotient_rank, int total_rank);

// 0 -> F_3 -> PB_5(S^2)/Z_2 -> PB_4(S^2)/Z_2 -> 0 is additive on
// abelianization ranks: 3 + 2 == 5.
bool forgetting_rank_check();

std::string to_string(const Word& w, const std::string& letter);

}  // namespace rsurf::braid
