#pragma once

#include <vector>

#include "exgr/grass.hpp"
#include "exgr/poly.hpp"
#include "exgr/subspace.hpp"

namespace exgr {

/// Wronskian determinant det(f_j^(i)) of the given polynomials.
Poly wronskian(const std::vector<Poly>& fs);

/// Monic linear ordinary differential operator of the given order with
/// rational-function coefficients a_0..a_{n-1} (lowest terms), acting as
/// x^(n) + a_{n-1} x^(n-1) + ... + a_0 x.
struct Odo {
  int order = 0;
  std::vector<RatFunc> coeffs;  // size == order, index = derivative order
};

bool operator==(const Odo& a, const Odo& b);

/// Formal adjoint, expanded by the Leibniz rule and renormalized to monic
/// form (the leading sign (-1)^order is absorbed into all coefficients).
Odo formal_adjoint(const Odo& l);

/// The equivalent operator x -> (1/mu) l(mu x); mu must be nonzero.
Odo mu_conjugate(const Odo& l, const RatFunc& mu);

/// l equals its formal adjoint. Odd orders are never self-adjoint.
bool is_self_adjoint_op(const Odo& l);

struct CenterBuild {
  Subspace x;  // span of the curve's coefficient vectors, in dual coordinates
  Center z;    // its annihilator under the canonical duality
};

/// The span X of t -> c(t) ^ c'(t) ^ ... ^ c^(m-1)(t), whose coordinates are
/// the m x m Wronskian minors of the fundamental system, together with the
/// annihilator center Z. Requires the full Wronskian of fs to be nonzero.
CenterBuild build_center(const std::vector<Poly>& fs, int m);

/// 1!2!...(n-m-1)! * (m(n-m))! / (m!(m+1)!...(n-1)!), exactly.
BigInt schubert_degree(int m, int n);

/// Wronskian of the solutions selected by the plane's canonical basis in
/// fs-coordinates; defined up to scale by the plane.
Poly wronski_map(const std::vector<Poly>& fs, const Subspace& plane);

}  // namespace exgr
