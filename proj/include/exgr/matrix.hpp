#pragma once

#include <initializer_list>
#include <vector>

#include "exgr/rational.hpp"

namespace exgr {

/// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  Matrix(int rows, int cols, std::vector<Rat> data);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<Rat> row(int i) const;
  std::vector<Rat> col(int j) const;
  const std::vector<Rat>& data() const { return a_; }

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& c, const Matrix& m);
  friend std::vector<Rat> operator*(const Matrix& m, const std::vector<Rat>& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct RrefResult {
  Matrix r;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

/// Exact Gauss-Jordan reduction. Deterministic: the pivot in each column is
/// the first row with a nonzero entry.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Rows span the right null space {v : m v = 0}. Not canonicalized.
Matrix kernel_basis(const Matrix& m);

Rat det(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws std::invalid_argument if singular

/// Pfaffian by expansion along the first row. Input must be skew-symmetric of
/// even size; pf(s)^2 == det(s).
Rat pfaffian(const Matrix& s);

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;  // free variables set to 0
  Matrix nullspace;             // rows span the homogeneous solutions
};

/// Solves a x = b exactly.
LinearSolution solve_linear(const Matrix& a, const std::vector<Rat>& b);

}  // namespace exgr
