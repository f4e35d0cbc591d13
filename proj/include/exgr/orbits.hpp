#pragma once

#include <optional>
#include <string>

#include "exgr/multivector.hpp"
#include "exgr/subspace.hpp"

namespace exgr {

/// GL-orbit of a nonzero 3-form on a 6-dimensional space, labelled by
/// codimension.
enum class OrbitLabel { O0, O1, O5, O10 };

const char* to_string(OrbitLabel label);

/// Quartic invariant data: k is the matrix of the endomorphism
/// phi -> (phi . w) ^ w of the dual space, read in wedge^5 V ~ V* via the top
/// pairing. Satisfies k^2 == lambda * identity exactly.
struct HitchinData {
  Matrix k;
  Rat lambda;
};

/// Certificates for a form in the codimension-5 orbit: w = a ^ sigma where a
/// is the canonical generator of alpha = ker(. ^ w), the hyperplane is the
/// annihilator of ker(w .), and sigma lies in wedge^2 of the hyperplane with
/// no term containing alpha's pivot index.
struct O5Data {
  Subspace alpha;       // dim 1 in V
  Subspace hyperplane;  // dim 5 in V
  Multivector sigma;    // grade 2
};

struct OrbitReport {
  OrbitLabel label = OrbitLabel::O0;
  Subspace wedge_kernel;  // ker of v -> v ^ w
  HitchinData hitchin;
  std::optional<O5Data> o5;
};

HitchinData hitchin(const Multivector& w);

/// Decision tree on dim ker(. ^ w): 3 -> O10, 1 -> O5, 0 -> (lambda != 0 ?
/// O0 : O1). Kernel dimension 2 is impossible and raises std::logic_error.
OrbitReport classify_orbit(const Multivector& w);

O5Data o5_decompose(const Multivector& w);  // requires w in O5

/// alpha <= l <= a, for the flag alpha inside a. Throws if alpha is not
/// contained in a.
bool in_schubert(const Subspace& l, const Subspace& alpha, const Subspace& a);

struct LineTypeResult {
  int type = 0;  // 1, 2, or 3
  std::optional<Subspace> shared_alpha;       // type 1
  std::optional<Multivector> common_sigma;    // type 2
  std::optional<Multivector> alpha1, alpha2;  // type 2: scaled so a_i ^ sigma = w_i
  std::optional<Subspace> shared_hyperplane;  // type 3
};

/// Trichotomy for a line spanned by two O5 forms, assuming the whole line
/// stays in O5 (checked on the endpoints and 10 fixed rational samples).
LineTypeResult classify_line(const Multivector& w1, const Multivector& w2);

/// Coordinates on hyperplane/alpha for an O5 form: carries sigma to a
/// nondegenerate 2-form on dimension 4 and planes of the Schubert variety to
/// 2-planes.
class VertexQuotient {
 public:
  explicit VertexQuotient(const O5Data& data);
  const Multivector& sigma_q() const { return sigma_q_; }
  /// Image of a plane with alpha <= plane <= hyperplane.
  Subspace map_plane(const Subspace& plane) const;

 private:
  std::vector<Rat> coords_in_basis(const std::vector<Rat>& v) const;
  O5Data data_;
  Matrix basis_;  // rows: alpha generator, then 4 completion vectors of the hyperplane
  Multivector sigma_q_{4, 2};
};

}  // namespace exgr
