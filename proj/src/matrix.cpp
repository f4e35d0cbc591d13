#include "exgr/matrix.hpp"

#include <stdexcept>

namespace exgr {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Matrix::Matrix(int rows, int cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("Matrix: data size mismatch");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Matrix();
  const int c = static_cast<int>(rows[0].size());
  Matrix m(static_cast<int>(rows.size()), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Matrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> Matrix::row(int i) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Rat> Matrix::col(int j) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in +");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in -");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Matrix operator*(const Rat& c, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = c * m.a_[i];
  return out;
}

std::vector<Rat> operator*(const Matrix& m, const std::vector<Rat>& v) {
  if (m.cols_ != static_cast<int>(v.size()))
    throw std::invalid_argument("Matrix: shape mismatch in m*v");
  std::vector<Rat> out(m.rows_, Rat(0));
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.r = m;
  Matrix& r = res.r;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i) {
      if (!r.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    const Rat inv = Rat(1) / r.at(lead, col);
    for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      const Rat f = r.at(i, col);
      for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> rows;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = Rat(1);
    for (int r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.r.at(r, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, m.cols());
  return Matrix::from_rows(rows);
}

Rat det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const int n = m.rows();
  Matrix a = m;
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    const Rat inv = Rat(1) / a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rat f = a.at(i, col) * inv;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  const RrefResult rr = rref(aug);
  for (int i = 0; i < n; ++i)
    if (i >= rr.rank || rr.pivots[i] != i)
      throw std::invalid_argument("inverse: singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

namespace {

Rat pfaffian_rec(const Matrix& s, std::vector<int>& idx) {
  if (idx.empty()) return Rat(1);
  const int i0 = idx[0];
  Rat acc(0);
  // pf = sum_{k>=1} (-1)^(k-1) s[i0][ik] pf(rest)
  for (size_t k = 1; k < idx.size(); ++k) {
    const Rat& x = s.at(i0, idx[k]);
    if (x.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (size_t j = 1; j < idx.size(); ++j)
      if (j != k) rest.push_back(idx[j]);
    const Rat sub = pfaffian_rec(s, rest);
    if ((k - 1) % 2 == 0)
      acc += x * sub;
    else
      acc -= x * sub;
  }
  return acc;
}

}  // namespace

Rat pfaffian(const Matrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("pfaffian: non-square");
  if (s.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (s.at(i, j) != -s.at(j, i))
        throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
  std::vector<int> idx(s.rows());
  for (int i = 0; i < s.rows(); ++i) idx[i] = i;
  return pfaffian_rec(s, idx);
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult rr = rref(aug);
  LinearSolution sol;
  sol.consistent = true;
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] == a.cols()) sol.consistent = false;
  if (!sol.consistent) return sol;
  sol.particular.assign(a.cols(), Rat(0));
  for (int i = 0; i < rr.rank; ++i) sol.particular[rr.pivots[i]] = rr.r.at(i, a.cols());
  Matrix sub(rr.r.rows(), a.cols());
  for (int i = 0; i < rr.r.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) sub.at(i, j) = rr.r.at(i, j);
  sol.nullspace = kernel_basis(sub);
  return sol;
}

}  // namespace exgr
