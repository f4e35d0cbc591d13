#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exgr/grass.hpp"
#include "exgr/polymatrix.hpp"

namespace exgr {

/// State-space realization (a, b, c) of sizes N x N, N x m, p x N.
struct Realization {
  Matrix a, b, c;
  int states() const { return a.rows(); }
  int inputs() const { return b.cols(); }
  int outputs() const { return c.rows(); }
};

void validate(const Realization& s);

struct TransferFunction {
  PolyMatrix num;  // c * adj(sI - a) * b, p x m
  Poly den;        // det(sI - a)
};

TransferFunction transfer_function(const Realization& s);

/// Polynomial curve s -> wedge of the columns of [den * I_m ; num], divided
/// by the gcd of all coordinate polynomials. Its degree is the McMillan
/// degree for minimal realizations.
struct HermannMartinCurve {
  int n = 0;                       // ambient dimension m + p
  int m = 0;                       // column count / grade
  std::vector<Multivector> coeffs; // by power of s, trailing coefficient nonzero
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

HermannMartinCurve hermann_martin(const Realization& s);

struct PpCenter {
  Subspace x;  // span of the curve coefficients in wedge^m C^(m+p)
  Center z;    // annihilator in wedge^p C^(m+p) under the top pairing
  bool proper = false;
  std::optional<Multivector> decomposable_witness;  // sample on the Grassmannian
};

PpCenter pp_center(const Realization& s, std::uint64_t seed = 0xC0FFEEULL);

/// Characteristic polynomial of a + b k c.
Poly pole_placement_poly(const Realization& s, const Matrix& k);

/// Realization in the transformed state/input/output coordinates:
/// (r^-1 (a + b q t^-1 c) r, r^-1 b w, t^-1 c r).
Realization feedback_transform(const Realization& s, const Matrix& r, const Matrix& w,
                               const Matrix& t, const Matrix& q);

bool is_symmetric(const Realization& s);  // a == a^T and c == b^T; needs m == p

bool is_controllable(const Realization& s);
bool is_observable(const Realization& s);
bool is_minimal(const Realization& s);

/// Block matrix [[w^-1, -w^-1 q t^-1], [0, t^-1]] relating the curves of a
/// realization and its feedback transform.
Matrix curve_equivalence_matrix(const Matrix& w, const Matrix& t, const Matrix& q);

/// Applies the induced wedge-power action coefficient-wise and renormalizes
/// by the content.
HermannMartinCurve transform_curve(const Matrix& g, const HermannMartinCurve& curve);

/// True iff the two curves agree up to one global nonzero rational factor.
bool curves_proportional(const HermannMartinCurve& a, const HermannMartinCurve& b);

/// Pairing of the curve against a fixed point of wedge^p: the polynomial
/// sum_k top_pairing(coeff_k, w) s^k.
Poly curve_pairing(const HermannMartinCurve& curve, const Multivector& w);

}  // namespace exgr
