#include "exgr/subspace.hpp"

#include <stdexcept>

namespace exgr {

Subspace::Subspace(int ambient, const Matrix& rows) : ambient_(ambient) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  const RrefResult rr = rref(rows);
  Matrix b(rr.rank, ambient);
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = rr.r.at(i, j);
  basis_ = std::move(b);
}

Subspace Subspace::span_of(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) throw std::invalid_argument("Subspace: need at least one row");
  return Subspace(static_cast<int>(rows[0].size()), Matrix::from_rows(rows));
}

std::vector<Rat> Subspace::generator() const {
  if (dim() != 1) throw std::logic_error("Subspace: generator() needs dim 1");
  return basis_.row(0);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace: vector dimension mismatch");
  Matrix stacked(dim() + 1, ambient_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int j = 0; j < ambient_; ++j) stacked.at(dim(), j) = v[j];
  return rank(stacked) == dim();
}

bool Subspace::includes(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  if (other.dim() == 0) return true;
  Matrix stacked(dim() + other.dim(), ambient_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int i = 0; i < other.dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = other.basis_.at(i, j);
  return rank(stacked) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace(a.ambient(), stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  // Row space equals the orthogonal complement of the null space over Q, so
  // the intersection is the kernel of the stacked annihilators.
  const Matrix na = kernel_basis(a.basis());
  const Matrix nb = kernel_basis(b.basis());
  Matrix stacked(na.rows() + nb.rows(), a.ambient());
  for (int i = 0; i < na.rows(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked.at(i, j) = na.at(i, j);
  for (int i = 0; i < nb.rows(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked.at(na.rows() + i, j) = nb.at(i, j);
  return kernel(stacked);
}

Subspace kernel(const Matrix& m) { return Subspace(m.cols(), kernel_basis(m)); }

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

}  // namespace exgr
