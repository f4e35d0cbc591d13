#pragma once

#include <vector>

#include "exgr/matrix.hpp"

namespace exgr {

/// Linear subspace stored as a canonical reduced-row-echelon basis (rows).
/// Pivot columns are strictly increasing with unit pivots and no zero rows,
/// so two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
  Subspace(int ambient, const Matrix& rows);  // canonicalizes
  static Subspace full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }
  static Subspace span_of(const std::vector<std::vector<Rat>>& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<Rat> basis_row(int i) const { return basis_.row(i); }
  /// The canonical generator of a one-dimensional subspace.
  std::vector<Rat> generator() const;

  bool contains(const std::vector<Rat>& v) const;
  bool includes(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Right null space of m, canonicalized.
Subspace kernel(const Matrix& m);

/// Annihilator {phi : phi(v) = 0 for all v in s}, in dual coordinates.
Subspace annihilator(const Subspace& s);

}  // namespace exgr
