#include "exgr/selfadj.hpp"

#include <stdexcept>

#include "exgr/rng.hpp"

namespace exgr {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::SelfAdjoint: return "self_adjoint";
    case VerdictStatus::RefutedByOrbit: return "refuted_by_orbit";
    case VerdictStatus::RefutedBySolve: return "refuted_by_solve";
    case VerdictStatus::DegreeOneEvidence: return "degree_one_evidence";
  }
  return "?";
}

bool contains_sigma_wedge(const Center& z, const Multivector& sigma, int m) {
  if (sigma.grade() != 2 || sigma.dim() != z.n())
    throw std::invalid_argument("contains_sigma_wedge: sigma must be a 2-form on V");
  if (m != z.m()) throw std::invalid_argument("contains_sigma_wedge: grade mismatch");
  if (m < 2) throw std::invalid_argument("contains_sigma_wedge: m must be at least 2");
  for (const IndexSet& idx : wedge_basis(z.n(), m - 2)) {
    const Multivector b = Multivector::basis_element(z.n(), idx);
    if (!z.contains(wedge(sigma, b))) return false;
  }
  return true;
}

namespace {

std::vector<Multivector> center_samples(const Center& z, std::uint64_t seed, int count) {
  std::vector<Multivector> samples = z.basis_multivectors();
  Lcg64 rng(seed);
  const int d = z.dim();
  for (int t = 0; t < count; ++t) {
    Multivector s(z.n(), z.m());
    while (s.is_zero()) {
      s = Multivector(z.n(), z.m());
      for (int i = 0; i < d; ++i) {
        const Rat c(rng.next_int(-9, 9));
        if (c.is_zero()) continue;
        s = s + c * Multivector::from_coords(z.n(), z.m(), z.span().basis_row(i));
      }
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

Matrix stack_generators(const std::vector<std::vector<Rat>>& rows) {
  return Matrix::from_rows(rows);
}

// Solves for sigma in wedge^2 V with e_i ^ sigma in span(z) for all i; the
// containment route used away from the dimension-6 case.
SelfAdjointVerdict recover_by_containment(const Center& z, std::uint64_t seed) {
  const int n = z.n();
  const auto& basis2 = wedge_basis(n, 2);
  const Subspace compl_space = annihilator(z.span());  // functionals killing z
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int i = 1; i <= n; ++i) {
    const Multivector ei = Multivector::basis_element(n, {i});
    // For each functional f on wedge^3 vanishing on z: f(e_i ^ sigma) = 0.
    std::vector<std::vector<Rat>> imgs;
    imgs.reserve(basis2.size());
    for (const IndexSet& idx : basis2)
      imgs.push_back(wedge(ei, Multivector::basis_element(n, idx)).coords());
    for (int r = 0; r < compl_space.dim(); ++r) {
      const std::vector<Rat> f = compl_space.basis_row(r);
      std::vector<Rat> row(basis2.size(), Rat(0));
      for (size_t col = 0; col < basis2.size(); ++col) {
        Rat acc(0);
        for (size_t k = 0; k < f.size(); ++k) acc += f[k] * imgs[col][k];
        row[col] = acc;
      }
      rows.push_back(std::move(row));
      rhs.push_back(Rat(0));
    }
  }
  const LinearSolution sol = solve_linear(stack_generators(rows), rhs);
  SelfAdjointVerdict verdict;
  if (!sol.consistent) {  // homogeneous system, cannot happen
    verdict.status = VerdictStatus::RefutedBySolve;
    verdict.reason = "containment system inconsistent";
    return verdict;
  }
  // Sample the solution space for a nondegenerate form: basis vectors first,
  // then 20 seeded random combinations.
  std::vector<std::vector<Rat>> candidates;
  for (int i = 0; i < sol.nullspace.rows(); ++i) candidates.push_back(sol.nullspace.row(i));
  Lcg64 rng(seed ^ 0x516A11ULL);
  for (int t = 0; t < 20 && sol.nullspace.rows() > 0; ++t) {
    std::vector<Rat> v(basis2.size(), Rat(0));
    for (int i = 0; i < sol.nullspace.rows(); ++i) {
      const Rat c(rng.next_int(-9, 9));
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] += c * sol.nullspace.at(i, j);
    }
    candidates.push_back(std::move(v));
  }
  for (const auto& cand : candidates) {
    const Multivector sigma = Multivector::from_coords(n, 2, cand);
    if (sigma.is_zero()) continue;
    if (pfaffian(two_form_matrix(sigma)).is_zero()) continue;
    if (!contains_sigma_wedge(z, sigma, z.m()))
      throw std::logic_error("recover_symplectic: containment solve is inconsistent");
    verdict.status = VerdictStatus::SelfAdjoint;
    verdict.sigma = sigma;
    return verdict;
  }
  verdict.status = VerdictStatus::RefutedBySolve;
  verdict.reason = "no nondegenerate form satisfies the containment system";
  return verdict;
}

SelfAdjointVerdict recover_36(const Center& z, std::uint64_t seed) {
  const int n = 6;
  SelfAdjointVerdict verdict;
  if (z.dim() < 6) {
    verdict.status = VerdictStatus::DegreeOneEvidence;
    verdict.reason = "center dimension at most 5: projection has degree 1";
    return verdict;
  }
  if (z.dim() > 6) return recover_by_containment(z, seed);

  // (a) classify the canonical basis and 20 seeded samples; anything outside
  // O5 refutes (a center of the form V ^ sigma lies in O5 away from 0).
  const std::vector<Multivector> samples = center_samples(z, seed, 20);
  std::vector<OrbitReport> reports;
  reports.reserve(samples.size());
  for (const Multivector& s : samples) {
    OrbitReport rep = classify_orbit(s);
    verdict.sample_orbits.push_back(rep.label);
    if (rep.label != OrbitLabel::O5) {
      verdict.status = VerdictStatus::RefutedByOrbit;
      verdict.witness = s;
      verdict.witness_orbit = rep.label;
      return verdict;
    }
    reports.push_back(std::move(rep));
  }

  // (b) greedy search for a basis whose vertex lines are independent and
  // whose vertex hyperplanes are independent.
  Lcg64 rng(seed ^ 0xBA515ULL);
  std::vector<Multivector> chosen;
  std::vector<O5Data> chosen_data;
  bool found = false;
  for (int attempt = 0; attempt < 50 && !found; ++attempt) {
    std::vector<Multivector> cand;
    if (attempt == 0) {
      cand = z.basis_multivectors();
    } else {
      Matrix mix(6, 6);
      do {
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) mix.at(i, j) = Rat(rng.next_int(-5, 5));
      } while (det(mix).is_zero());
      const auto basis = z.basis_multivectors();
      for (int i = 0; i < 6; ++i) {
        Multivector s(n, 3);
        for (int j = 0; j < 6; ++j) s = s + mix.at(i, j) * basis[j];
        cand.push_back(std::move(s));
      }
    }
    std::vector<O5Data> data;
    bool ok = true;
    for (const Multivector& c : cand) {
      OrbitReport rep = classify_orbit(c);
      if (rep.label != OrbitLabel::O5) {
        verdict.status = VerdictStatus::RefutedByOrbit;
        verdict.witness = c;
        verdict.witness_orbit = rep.label;
        return verdict;
      }
      data.push_back(*rep.o5);
    }
    std::vector<std::vector<Rat>> alpha_rows, ann_rows;
    for (const O5Data& d : data) {
      alpha_rows.push_back(d.alpha.generator());
      ann_rows.push_back(annihilator(d.hyperplane).generator());
    }
    if (rank(Matrix::from_rows(alpha_rows)) == 6 &&
        rank(Matrix::from_rows(ann_rows)) == 6) {
      chosen = std::move(cand);
      chosen_data = std::move(data);
      found = true;
    }
    (void)ok;
  }
  if (!found) {
    verdict.status = VerdictStatus::DegreeOneEvidence;
    verdict.reason =
        "no basis with independent vertex data found: vertex maps degenerate";
    const VertexMapsReport vm = vertex_maps(z, seed);
    verdict.e_spans = vm.e_spans;
    verdict.f_spans = vm.f_spans;
    return verdict;
  }

  // (c) solve a_i ^ sigma = c_i w_i with c_1 = 1.
  const auto& basis2 = wedge_basis(n, 2);
  const long rows_wedge = binom(n, 3);
  const int sigma_cols = static_cast<int>(basis2.size());
  const int cols = sigma_cols + 5;  // sigma coords, then c_2..c_6
  std::vector<std::vector<Rat>> rows(6 * rows_wedge, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> rhs(6 * rows_wedge, Rat(0));
  for (int i = 0; i < 6; ++i) {
    const Multivector ai = Multivector::from_vector(n, chosen_data[i].alpha.generator());
    for (int col = 0; col < sigma_cols; ++col) {
      const Multivector img = wedge(ai, Multivector::basis_element(n, basis2[col]));
      for (const auto& [idx, c] : img.terms())
        rows[i * rows_wedge + wedge_basis_index(n, 3, idx)][col] = c;
    }
    const std::vector<Rat> wc = chosen[i].coords();
    if (i == 0) {
      for (long r = 0; r < rows_wedge; ++r) rhs[r] = wc[r];
    } else {
      for (long r = 0; r < rows_wedge; ++r)
        rows[i * rows_wedge + r][sigma_cols + i - 1] = -wc[r];
    }
  }
  const LinearSolution sol = solve_linear(Matrix::from_rows(rows), rhs);
  if (!sol.consistent) {
    verdict.status = VerdictStatus::RefutedBySolve;
    verdict.reason = "wedge-factor system has no solution";
    return verdict;
  }
  // Sample the affine solution space for a nondegenerate sigma.
  std::vector<std::vector<Rat>> candidates;
  candidates.push_back(sol.particular);
  for (int i = 0; i < sol.nullspace.rows(); ++i) {
    std::vector<Rat> v = sol.particular;
    for (int j = 0; j < cols; ++j) v[j] += sol.nullspace.at(i, j);
    candidates.push_back(std::move(v));
  }
  Lcg64 rng2(seed ^ 0x5A3D1EULL);
  for (int t = 0; t < 20 && sol.nullspace.rows() > 0; ++t) {
    std::vector<Rat> v = sol.particular;
    for (int i = 0; i < sol.nullspace.rows(); ++i) {
      const Rat c(rng2.next_int(-9, 9));
      if (c.is_zero()) continue;
      for (int j = 0; j < cols; ++j) v[j] += c * sol.nullspace.at(i, j);
    }
    candidates.push_back(std::move(v));
  }
  for (const auto& cand : candidates) {
    std::vector<Rat> sigma_coords(cand.begin(), cand.begin() + sigma_cols);
    const Multivector sigma = Multivector::from_coords(n, 2, sigma_coords);
    if (sigma.is_zero()) continue;
    if (pfaffian(two_form_matrix(sigma)).is_zero()) continue;
    if (!contains_sigma_wedge(z, sigma, 3)) continue;
    verdict.status = VerdictStatus::SelfAdjoint;
    verdict.sigma = sigma;
    return verdict;
  }
  verdict.status = VerdictStatus::RefutedBySolve;
  verdict.reason = "wedge-factor system admits only degenerate forms";
  return verdict;
}

SelfAdjointVerdict recover_24(const Center& z, std::uint64_t seed) {
  SelfAdjointVerdict verdict;
  if (z.dim() == 0) {
    verdict.status = VerdictStatus::DegreeOneEvidence;
    verdict.reason = "zero center: projection is injective on coordinates";
    return verdict;
  }
  // Off the Grassmannian every point of P(wedge^2 C^4) is symplectic, so any
  // nondegenerate element of z is a witness; a decomposable sample refutes
  // disjointness from the Grassmannian instead.
  const std::vector<Multivector> samples = center_samples(z, seed, 20);
  std::optional<Multivector> witness;
  for (const Multivector& s : samples) {
    if (pfaffian(two_form_matrix(s)).is_zero()) {
      verdict.status = VerdictStatus::RefutedByOrbit;
      verdict.witness = s;
      verdict.reason = "decomposable element: center meets the Grassmannian";
      return verdict;
    }
    if (!witness) witness = s;
  }
  verdict.status = VerdictStatus::SelfAdjoint;
  verdict.sigma = normalize_projective(*witness);
  (void)seed;
  return verdict;
}

}  // namespace

VertexMapsReport vertex_maps(const Center& z, std::uint64_t seed) {
  if (z.n() != 6 || z.m() != 3)
    throw std::invalid_argument("vertex_maps: implemented for 3-forms on dimension 6");
  VertexMapsReport report;
  const std::vector<Multivector> samples = center_samples(z, seed, 20);
  std::vector<std::vector<Rat>> alpha_rows, ann_rows;
  for (const Multivector& s : samples) {
    const OrbitReport rep = classify_orbit(s);
    if (rep.label != OrbitLabel::O5) {
      report.all_o5 = false;
      report.offending = s;
      report.offending_orbit = rep.label;
      return report;
    }
    report.alphas.push_back(rep.o5->alpha);
    report.hyperplanes.push_back(rep.o5->hyperplane);
    alpha_rows.push_back(rep.o5->alpha.generator());
    ann_rows.push_back(annihilator(rep.o5->hyperplane).generator());
  }
  report.all_o5 = true;
  report.e_spans = rank(Matrix::from_rows(alpha_rows)) == 6;
  report.f_spans = rank(Matrix::from_rows(ann_rows)) == 6;
  return report;
}

SelfAdjointVerdict recover_symplectic(const Center& z, std::uint64_t seed) {
  if (z.n() == 6 && z.m() == 3) return recover_36(z, seed);
  if (z.n() == 4 && z.m() == 2) return recover_24(z, seed);
  throw std::invalid_argument("recover_symplectic: only (m,n) = (3,6) and (2,4)");
}

DoubleCoverReport verify_double_cover(const Center& z, const SymplecticForm& sigma,
                                      int trials, std::uint64_t seed) {
  const int n = z.n();
  const int m = z.m();
  if (sigma.sigma().dim() != n)
    throw std::invalid_argument("verify_double_cover: ambient mismatch");
  DoubleCoverReport report;
  report.trials = trials;
  Lcg64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Matrix plane(m, n);
    do {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) plane.at(i, j) = Rat(rng.next_int(-5, 5));
    } while (rank(plane) != m);
    const Subspace lambda(n, plane);
    const Subspace complement = skew_complement(lambda, sigma);
    if (complement == lambda) {
      ++report.lagrangian;
      ++report.passes;
      continue;
    }
    bool ok = false;
    try {
      ok = project(pluecker(lambda).mv(), z) == project(pluecker(complement).mv(), z);
    } catch (const std::domain_error&) {
      ok = false;  // center hit: cannot happen for a center off the Grassmannian
    }
    if (ok)
      ++report.passes;
    else
      report.failures.push_back(t);
  }
  return report;
}

}  // namespace exgr
