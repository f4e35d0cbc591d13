#pragma once

#include <cstdint>

#include "exgr/grass.hpp"
#include "exgr/orbits.hpp"
#include "exgr/rng.hpp"
#include "exgr/syscon.hpp"

namespace exgr::fixtures {

/// Normal forms of the four orbits of 3-forms on dimension 6.
Multivector normal_form(OrbitLabel label);

/// e12 + e34 + e56 on dimension 6.
Multivector sigma_standard6();
/// e12 + e34 on dimension 4.
Multivector sigma_standard4();

/// The center spanned by {e_i ^ sigma : i = 1..n}.
Center v_wedge_sigma(const Multivector& sigma);

Matrix random_gl(Lcg64& rng, int n, int lo = -3, int hi = 3);
Subspace random_plane(Lcg64& rng, int n, int m, int lo = -5, int hi = 5);
Multivector random_form(Lcg64& rng, int n, int k, int lo = -4, int hi = 4);
Multivector random_symplectic(Lcg64& rng, int n, int lo = -4, int hi = 4);

/// V ^ sigma with one basis element replaced by a random perturbation;
/// the result still has dimension 2n but is no longer of the product shape.
Center perturbed_center(Lcg64& rng, const Multivector& sigma);

/// Double integrator: N = 2, single input, single output.
Realization siso_double_integrator();
/// Symmetric minimal fixture with N = 4, two inputs, two outputs.
Realization symmetric22();
/// Seeded symmetric minimal fixture with N = 13, three inputs and outputs;
/// its pole-placement center has dimension 6.
Realization symmetric33(std::uint64_t seed = 0x33A11CEULL);
/// Seeded dense fixture of the given shape.
Realization random_realization(Lcg64& rng, int n, int m, int p, int lo = -2, int hi = 2);

/// The three line fixtures of each type, as pairs of O5 forms.
std::pair<Multivector, Multivector> line_fixture(int type);

}  // namespace exgr::fixtures
