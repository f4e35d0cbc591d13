#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exgr/matrix.hpp"
#include "exgr/rational.hpp"

namespace exgr {

/// Basis label for a wedge monomial: strictly increasing indices in 1..dim.
using IndexSet = std::vector<int>;

bool is_strictly_increasing(const IndexSet& idx);
long binom(int n, int k);

/// All grade-k index sets over 1..n in lexicographic order.
const std::vector<IndexSet>& wedge_basis(int n, int k);
/// Lexicographic position of idx within wedge_basis(n, k).
int wedge_basis_index(int n, int k, const IndexSet& idx);

/// Sparse grade-k multivector over Rat. Terms map strictly increasing index
/// sets to nonzero coefficients; iteration is lexicographic, so serialized
/// output is byte-deterministic. Also used for elements of the dual wedge
/// powers (same shape, dual basis e*_I).
class Multivector {
 public:
  Multivector(int dim, int grade);
  static Multivector basis_element(int dim, const IndexSet& idx);
  static Multivector from_vector(int dim, const std::vector<Rat>& coords);  // grade 1
  static Multivector scalar(int dim, const Rat& c);                         // grade 0
  static Multivector from_coords(int dim, int grade, const std::vector<Rat>& coords);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Rat>& terms() const { return terms_; }
  Rat coeff(const IndexSet& idx) const;
  void set_term(const IndexSet& idx, const Rat& c);  // validates the index set

  /// Dense coefficient vector in lexicographic basis order.
  std::vector<Rat> coords() const;
  /// Coefficient of the lex-first nonzero term (0 if zero).
  Rat leading_coeff() const;

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Rat& c, const Multivector& w);
  friend bool operator==(const Multivector& a, const Multivector& b);
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  std::string str() const;

 private:
  int dim_, grade_;
  std::map<IndexSet, Rat> terms_;
};

/// Graded-anticommutative product. Grades add; when they exceed the ambient
/// dimension the result is the zero multivector of grade min(j+k, dim).
Multivector wedge(const Multivector& a, const Multivector& b);

/// Contraction of a grade-1 dual vector against a grade-k multivector:
/// phi . (v1 ^ ... ^ vk) = sum_i (-1)^(i-1) phi(v_i) v1 ^ ... v^_i ... ^ vk.
Multivector contract(const Multivector& phi, const Multivector& w);

/// Iterated contraction by the dual basis monomial e*_dual, first index first.
Multivector contract_basis(const IndexSet& dual, const Multivector& w);

/// Coefficient of the top monomial e_{1..n} in a ^ b; requires complementary
/// grades.
Rat top_pairing(const Multivector& a, const Multivector& b);

/// Induced action of g on the wedge power (each e_i maps to column i of g).
Multivector apply_gl(const Matrix& g, const Multivector& w);

/// Projective comparison: a == c*b for some nonzero scalar c.
bool proportional(const Multivector& a, const Multivector& b);

/// Scales so that the lex-first nonzero coefficient equals 1.
Multivector normalize_projective(const Multivector& w);

/// Matrix of v -> v ^ w as a map V -> wedge^(k+1) V in lexicographic bases.
Matrix wedge_map(const Multivector& w);

/// Matrix of phi -> phi . w as a map V* -> wedge^(k-1) V.
Matrix contract_map(const Multivector& w);

/// Sign of the merge of two disjoint increasing index sets (nullopt if they
/// intersect): (-1)^(number of transpositions to sort the concatenation).
std::optional<std::pair<IndexSet, int>> merge_index_sets(const IndexSet& a,
                                                         const IndexSet& b);

}  // namespace exgr
