#pragma once

#include <vector>

#include "exgr/matrix.hpp"
#include "exgr/poly.hpp"

namespace exgr {

/// Matrix with univariate polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix identity(int n);
  static PolyMatrix from_scalar(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  bool is_zero() const;
  int max_deg() const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& p, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

PolyMatrix operator*(const Matrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const Matrix& b);

/// Determinant by cofactor expansion (intended for small matrices).
Poly det(const PolyMatrix& m);

struct Resolvent {
  PolyMatrix adjugate;  // adj(sI - a)
  Poly charpoly;        // det(sI - a), monic
};

/// Faddeev-LeVerrier recurrence; satisfies (sI - a) * adjugate == charpoly * I
/// exactly.
Resolvent resolvent(const Matrix& a);

Poly char_poly(const Matrix& a);

}  // namespace exgr
