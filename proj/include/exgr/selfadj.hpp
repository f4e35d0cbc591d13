#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exgr/grass.hpp"
#include "exgr/orbits.hpp"

namespace exgr {

inline constexpr std::uint64_t kDefaultSampleSeed = 0x5EEDBA5EULL;

enum class VerdictStatus { SelfAdjoint, RefutedByOrbit, RefutedBySolve, DegreeOneEvidence };

const char* to_string(VerdictStatus s);

struct SelfAdjointVerdict {
  VerdictStatus status = VerdictStatus::RefutedBySolve;
  std::optional<Multivector> sigma;         // SelfAdjoint: witness form
  std::optional<Multivector> witness;       // RefutedByOrbit: offending element
  std::optional<OrbitLabel> witness_orbit;  // its orbit (3-forms only)
  std::string reason;                       // DegreeOneEvidence / diagnostics
  std::vector<OrbitLabel> sample_orbits;    // per-sample classification (3-forms)
  std::optional<bool> e_spans, f_spans;     // vertex-map spanning flags

  bool self_adjoint() const { return status == VerdictStatus::SelfAdjoint; }
};

/// True iff sigma ^ b lies in the span of z for every basis monomial b of
/// wedge^(m-2) V (exact membership).
bool contains_sigma_wedge(const Center& z, const Multivector& sigma, int m);

struct VertexMapsReport {
  bool all_o5 = false;
  std::optional<Multivector> offending;
  std::optional<OrbitLabel> offending_orbit;
  std::vector<Subspace> alphas;       // vertex lines, basis first then samples
  std::vector<Subspace> hyperplanes;  // vertex hyperplanes, same order
  bool e_spans = false;               // alphas span V
  bool f_spans = false;               // hyperplane annihilators span V*
};

/// Vertex data of the canonical basis plus 20 seeded random combinations of
/// a center expected to sit inside O5; any sample off O5 is returned as the
/// offending witness instead.
VertexMapsReport vertex_maps(const Center& z, std::uint64_t seed = kDefaultSampleSeed);

/// Decides whether the center contains sigma ^ wedge^(m-2) V for a symplectic
/// sigma and recovers sigma. Implemented for (m, n) = (3, 6) and (2, 4).
SelfAdjointVerdict recover_symplectic(const Center& z,
                                      std::uint64_t seed = kDefaultSampleSeed);

struct DoubleCoverReport {
  int trials = 0;
  int passes = 0;
  int lagrangian = 0;          // draws fixed by the skew complement
  std::vector<int> failures;   // failing trial indices
  bool all_passed() const { return passes == trials; }
};

/// Samples random rational points of the Grassmannian and checks that
/// projection through z identifies each plane with its skew-orthogonal
/// complement.
DoubleCoverReport verify_double_cover(const Center& z, const SymplecticForm& sigma,
                                      int trials, std::uint64_t seed);

}  // namespace exgr
