#pragma once

#include <optional>
#include <vector>

#include "exgr/multivector.hpp"
#include "exgr/subspace.hpp"

namespace exgr {

/// A point of the projectivized wedge power: a nonzero multivector stored
/// with its lex-first nonzero coefficient scaled to 1, so equality of stored
/// forms is projective equality.
class PluckerPoint {
 public:
  explicit PluckerPoint(const Multivector& w);  // throws on zero input
  const Multivector& mv() const { return v_; }
  int dim() const { return v_.dim(); }
  int grade() const { return v_.grade(); }
  friend bool operator==(const PluckerPoint& a, const PluckerPoint& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const PluckerPoint& a, const PluckerPoint& b) {
    return !(a == b);
  }

 private:
  Multivector v_;
};

/// Linear projection center: a nonzero linear subspace of wedge^m of an
/// n-dimensional space, canonical basis inside.
class Center {
 public:
  Center(int n, int m, const Subspace& span);
  static Center from_spanning(int n, int m, const std::vector<Multivector>& gens);

  int n() const { return n_; }
  int m() const { return m_; }
  int dim() const { return span_.dim(); }
  const Subspace& span() const { return span_; }
  std::vector<Multivector> basis_multivectors() const;
  bool contains(const Multivector& w) const;

 private:
  int n_, m_;
  Subspace span_;
};

/// Nondegenerate 2-form sigma (an element of wedge^2 V, i.e. a symplectic
/// form on V*) together with the induced form on V, cached as the inverse
/// coefficient matrix: dual_matrix() * form_matrix() == identity.
class SymplecticForm {
 public:
  explicit SymplecticForm(const Multivector& sigma);  // domain_error if degenerate
  const Multivector& sigma() const { return sigma_; }
  const Matrix& form_matrix() const { return s_; }
  const Matrix& dual_matrix() const { return s_inv_; }

 private:
  Multivector sigma_;
  Matrix s_, s_inv_;
};

/// Skew coefficient matrix of a grade-2 multivector: at(i,j) = coeff of e_{i+1,j+1}.
Matrix two_form_matrix(const Multivector& sigma);
Multivector two_form_from_matrix(const Matrix& s);

/// Plucker vector of the span of m independent vectors; throws on dependence.
PluckerPoint pluecker(int n, const std::vector<std::vector<Rat>>& basis);
PluckerPoint pluecker(const Subspace& s);

/// The m-dimensional subspace with Plucker vector w, when w is decomposable
/// (kernel criterion: dim{v : v ^ w = 0} == grade), else nullopt.
std::optional<Subspace> is_decomposable(const Multivector& w);

/// Skew-orthogonal complement of l with respect to the induced form on V.
Subspace skew_complement(const Subspace& l, const SymplecticForm& sigma);

/// Quotient coordinates of w modulo the center: the non-pivot coordinates of
/// the reduction of w against the canonical basis of z, normalized so the
/// first nonzero entry is 1. Throws domain_error when w lies in the center.
std::vector<Rat> project(const Multivector& w, const Center& z);

/// Intersection point of the projective line through l1, l2 with the center,
/// or nullopt. Throws if l1 == l2 or the whole line lies inside the center.
std::optional<Multivector> secant_meets_center(const PluckerPoint& l1,
                                               const PluckerPoint& l2,
                                               const Center& z);

struct FiberResult {
  std::vector<PluckerPoint> partners;   // decomposable points != l on the line
  std::vector<Subspace> partner_planes; // their subspaces, parallel order
  int tangency_mult = 0;  // extra vanishing order of the pencil at l
  int nonrational_roots = 0;
};

/// All decomposable points other than l on the pencil {l + t w}: every
/// decomposability quadric restricted to the pencil vanishes at t = 0, is
/// deflated there, and the rational roots of the gcd of the deflations give
/// the partners. Requires l decomposable and w not.
FiberResult fiber_partners(const PluckerPoint& l, const PluckerPoint& w);

}  // namespace exgr
