#include "exgr/polymatrix.hpp"

#include <stdexcept>

namespace exgr {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative shape");
  a_.assign(static_cast<size_t>(rows) * cols, Poly());
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

PolyMatrix PolyMatrix::from_scalar(const Matrix& s) {
  PolyMatrix m(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (!s.at(i, j).is_zero()) m.at(i, j) = Poly::constant(s.at(i, j));
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const Poly& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

int PolyMatrix::max_deg() const {
  int d = -1;
  for (const Poly& p : a_) d = std::max(d, p.deg());
  return d;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("PolyMatrix: shape mismatch in +");
  PolyMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("PolyMatrix: shape mismatch in -");
  PolyMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in *");
  PolyMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) = m.at(i, j) + aik * b.at(k, j);
    }
  return m;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
  PolyMatrix out(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = p * m.a_[i];
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

PolyMatrix operator*(const Matrix& a, const PolyMatrix& b) {
  return PolyMatrix::from_scalar(a) * b;
}

PolyMatrix operator*(const PolyMatrix& a, const Matrix& b) {
  return a * PolyMatrix::from_scalar(b);
}

Poly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const int n = m.rows();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m.at(0, 0);
  Poly acc;
  for (int i = 0; i < n; ++i) {
    if (m.at(i, 0).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    int mi = 0;
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 1; c < n; ++c) minor.at(mi, c - 1) = m.at(r, c);
      ++mi;
    }
    const Poly term = m.at(i, 0) * det(minor);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Resolvent resolvent(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("resolvent: non-square");
  const int n = a.rows();
  // charpoly(s) = s^n + c[n-1] s^(n-1) + ... + c[0];
  // adj(sI - a) = sum_k b_k s^(n-1-k) with b_0 = I,
  // c[n-k] = -tr(a b_{k-1})/k, b_k = a b_{k-1} + c[n-k] I.
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  std::vector<Matrix> b;
  b.push_back(Matrix::identity(n));
  for (int k = 1; k <= n; ++k) {
    const Matrix ab = a * b.back();
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += ab.at(i, i);
    c[n - k] = -tr / Rat(k);
    if (k < n) {
      Matrix next = ab;
      for (int i = 0; i < n; ++i) next.at(i, i) += c[n - k];
      b.push_back(std::move(next));
    }
  }
  Resolvent out;
  out.charpoly = Poly(std::move(c));
  out.adjugate = PolyMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> coeffs(n, Rat(0));
      for (int k = 0; k < n; ++k) coeffs[n - 1 - k] = b[k].at(i, j);
      out.adjugate.at(i, j) = Poly(std::move(coeffs));
    }
  return out;
}

Poly char_poly(const Matrix& a) { return resolvent(a).charpoly; }

}  // namespace exgr
