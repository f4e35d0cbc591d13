#include "exgr/orbits.hpp"

#include <array>
#include <stdexcept>

namespace exgr {

const char* to_string(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::O0: return "O0";
    case OrbitLabel::O1: return "O1";
    case OrbitLabel::O5: return "O5";
    case OrbitLabel::O10: return "O10";
  }
  return "?";
}

HitchinData hitchin(const Multivector& w) {
  if (w.dim() != 6 || w.grade() != 3)
    throw std::invalid_argument("hitchin: need a 3-form on dimension 6");
  const int n = 6;
  HitchinData out;
  out.k = Matrix(n, n);
  for (int j = 1; j <= n; ++j) {
    const Multivector img =
        wedge(contract(Multivector::basis_element(n, {j}), w), w);  // grade 5
    // Read the grade-5 element as a dual vector via the top pairing.
    for (int i = 1; i <= n; ++i)
      out.k.at(i - 1, j - 1) = top_pairing(Multivector::basis_element(n, {i}), img);
  }
  const Matrix k2 = out.k * out.k;
  out.lambda = k2.at(0, 0);
  if (k2 != out.lambda * Matrix::identity(n))
    throw std::logic_error("hitchin: k^2 is not a scalar matrix");
  return out;
}

OrbitReport classify_orbit(const Multivector& w) {
  if (w.dim() != 6 || w.grade() != 3)
    throw std::invalid_argument("classify_orbit: need a 3-form on dimension 6");
  if (w.is_zero()) throw std::invalid_argument("classify_orbit: zero form");
  OrbitReport rep;
  rep.wedge_kernel = kernel(wedge_map(w));
  rep.hitchin = hitchin(w);
  switch (rep.wedge_kernel.dim()) {
    case 3:
      rep.label = OrbitLabel::O10;
      break;
    case 1:
      rep.label = OrbitLabel::O5;
      rep.o5 = o5_decompose(w);
      break;
    case 0:
      rep.label = rep.hitchin.lambda.is_zero() ? OrbitLabel::O1 : OrbitLabel::O0;
      break;
    default:
      throw std::logic_error("classify_orbit: impossible wedge-kernel dimension");
  }
  return rep;
}

O5Data o5_decompose(const Multivector& w) {
  if (w.dim() != 6 || w.grade() != 3)
    throw std::invalid_argument("o5_decompose: need a 3-form on dimension 6");
  const int n = 6;
  const Subspace alpha = kernel(wedge_map(w));
  if (alpha.dim() != 1) throw std::domain_error("o5_decompose: form is not in O5");
  const Subspace dual_ker = kernel(contract_map(w));  // inside V*
  if (dual_ker.dim() != 1) throw std::logic_error("o5_decompose: contraction kernel not 1-dim");
  const Subspace hyperplane = annihilator(dual_ker);

  // Solve a ^ sigma = w for sigma in wedge^2(hyperplane) with no term
  // containing alpha's pivot index; the combined system has a unique solution.
  const std::vector<Rat> a = alpha.generator();
  const Multivector am = Multivector::from_vector(n, a);
  const std::vector<Rat> psi = dual_ker.generator();
  const Multivector psim = Multivector::from_vector(n, psi);
  const auto& basis2 = wedge_basis(n, 2);
  int pivot = 0;
  while (a[pivot].is_zero()) ++pivot;
  ++pivot;  // 1-based index

  const long rows_wedge = binom(n, 3);
  const long rows_contract = binom(n, 1);
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  // a ^ sigma = w
  for (long r = 0; r < rows_wedge; ++r) rows.emplace_back(basis2.size(), Rat(0));
  for (size_t col = 0; col < basis2.size(); ++col) {
    const Multivector img = wedge(am, Multivector::basis_element(n, basis2[col]));
    for (const auto& [idx, c] : img.terms()) rows[wedge_basis_index(n, 3, idx)][col] = c;
  }
  for (const Rat& c : w.coords()) rhs.push_back(c);
  // psi . sigma = 0  (sigma lies in wedge^2 of the hyperplane)
  for (long r = 0; r < rows_contract; ++r) {
    rows.emplace_back(basis2.size(), Rat(0));
    rhs.push_back(Rat(0));
  }
  for (size_t col = 0; col < basis2.size(); ++col) {
    const Multivector img = contract(psim, Multivector::basis_element(n, basis2[col]));
    for (const auto& [idx, c] : img.terms())
      rows[rows_wedge + wedge_basis_index(n, 1, idx)][col] = c;
  }
  // gauge: no sigma term contains the pivot index
  for (size_t col = 0; col < basis2.size(); ++col) {
    if (basis2[col][0] != pivot && basis2[col][1] != pivot) continue;
    std::vector<Rat> row(basis2.size(), Rat(0));
    row[col] = Rat(1);
    rows.push_back(std::move(row));
    rhs.push_back(Rat(0));
  }
  const LinearSolution sol = solve_linear(Matrix::from_rows(rows), rhs);
  if (!sol.consistent) throw std::logic_error("o5_decompose: factor system inconsistent");
  if (sol.nullspace.rows() != 0)
    throw std::logic_error("o5_decompose: factor not unique under the gauge");
  O5Data out{alpha, hyperplane, Multivector::from_coords(n, 2, sol.particular)};
  const Multivector sq = wedge(out.sigma, out.sigma);
  if (sq.is_zero()) throw std::logic_error("o5_decompose: sigma is decomposable");
  return out;
}

bool in_schubert(const Subspace& l, const Subspace& alpha, const Subspace& a) {
  if (!a.includes(alpha)) throw std::invalid_argument("in_schubert: flag is not nested");
  return l.includes(alpha) && a.includes(l);
}

namespace {

constexpr std::array<std::pair<int, int>, 10> kPencilSamples = {
    {{1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {-2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, -2}}};

}  // namespace

LineTypeResult classify_line(const Multivector& w1, const Multivector& w2) {
  if (w1.dim() != 6 || w1.grade() != 3 || w2.dim() != 6 || w2.grade() != 3)
    throw std::invalid_argument("classify_line: need 3-forms on dimension 6");
  if (proportional(w1, w2))
    throw std::invalid_argument("classify_line: forms are dependent");
  const OrbitReport r1 = classify_orbit(w1);
  const OrbitReport r2 = classify_orbit(w2);
  if (r1.label != OrbitLabel::O5 || r2.label != OrbitLabel::O5)
    throw std::domain_error("classify_line: endpoint leaves O5");
  for (const auto& [lam, mu] : kPencilSamples) {
    const Multivector s = Rat(lam) * w1 + Rat(mu) * w2;
    if (classify_orbit(s).label != OrbitLabel::O5)
      throw std::domain_error("classify_line: pencil sample leaves O5");
  }

  LineTypeResult out;
  if (r1.o5->alpha == r2.o5->alpha) {
    out.type = 1;
    out.shared_alpha = r1.o5->alpha;
    return out;
  }
  if (r1.o5->hyperplane == r2.o5->hyperplane) {
    out.type = 3;
    out.shared_hyperplane = r1.o5->hyperplane;
    return out;
  }
  out.type = 2;

  // Common 2-form: solve a1 ^ sigma = w1, a2 ^ sigma = c2 w2 for (sigma, c2),
  // then rescale a2 by 1/c2. The solution is unique modulo a1 ^ a2; the
  // representative zeroes sigma's coefficient at the lex-first coordinate
  // where a1 ^ a2 is nonzero.
  const int n = 6;
  const Multivector a1 = Multivector::from_vector(n, r1.o5->alpha.generator());
  const Multivector a2 = Multivector::from_vector(n, r2.o5->alpha.generator());
  const auto& basis2 = wedge_basis(n, 2);
  const long rows_wedge = binom(n, 3);
  const int cols = static_cast<int>(basis2.size()) + 1;  // sigma coords + c2
  std::vector<std::vector<Rat>> rows(2 * rows_wedge, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> rhs(2 * rows_wedge, Rat(0));
  for (size_t col = 0; col < basis2.size(); ++col) {
    const Multivector b = Multivector::basis_element(n, basis2[col]);
    const Multivector img1 = wedge(a1, b);
    for (const auto& [idx, c] : img1.terms()) rows[wedge_basis_index(n, 3, idx)][col] = c;
    const Multivector img2 = wedge(a2, b);
    for (const auto& [idx, c] : img2.terms())
      rows[rows_wedge + wedge_basis_index(n, 3, idx)][col] = c;
  }
  {
    const std::vector<Rat> w1c = w1.coords();
    for (long r = 0; r < rows_wedge; ++r) rhs[r] = w1c[r];
    const std::vector<Rat> w2c = w2.coords();
    for (long r = 0; r < rows_wedge; ++r) rows[rows_wedge + r][cols - 1] = -w2c[r];
  }
  const LinearSolution sol = solve_linear(Matrix::from_rows(rows), rhs);
  if (!sol.consistent) throw std::logic_error("classify_line: common-factor solve failed");
  std::vector<Rat> particular = sol.particular;
  const Multivector gauge = wedge(a1, a2);
  if (sol.nullspace.rows() > 0) {
    if (sol.nullspace.rows() != 1)
      throw std::logic_error("classify_line: unexpected solution space");
    const std::vector<Rat> dir = sol.nullspace.row(0);
    const std::vector<Rat> gc = gauge.coords();
    int k0 = -1;
    for (size_t k = 0; k < gc.size(); ++k)
      if (!gc[k].is_zero()) {
        k0 = static_cast<int>(k);
        break;
      }
    if (k0 >= 0 && !dir[k0].is_zero()) {
      const Rat f = particular[k0] / dir[k0];
      for (int j = 0; j < cols; ++j) particular[j] -= f * dir[j];
    }
  }
  const Rat c2 = particular[cols - 1];
  if (c2.is_zero()) throw std::logic_error("classify_line: degenerate scale");
  std::vector<Rat> sigma_coords(particular.begin(), particular.end() - 1);
  out.common_sigma = Multivector::from_coords(n, 2, sigma_coords);
  out.alpha1 = a1;
  out.alpha2 = (Rat(1) / c2) * a2;
  return out;
}

VertexQuotient::VertexQuotient(const O5Data& data) : data_(data) {
  const int n = data.alpha.ambient();
  std::vector<std::vector<Rat>> rows{data.alpha.generator()};
  for (int i = 0; i < data.hyperplane.dim() && static_cast<int>(rows.size()) < 5; ++i) {
    std::vector<std::vector<Rat>> cand = rows;
    cand.push_back(data.hyperplane.basis_row(i));
    if (rank(Matrix::from_rows(cand)) == static_cast<int>(cand.size())) rows = cand;
  }
  if (rows.size() != 5) throw std::logic_error("VertexQuotient: completion failed");
  basis_ = Matrix::from_rows(rows);

  // Express sigma in the completed basis; drop the alpha component.
  const auto& pairs = wedge_basis(5, 2);
  std::vector<std::vector<Rat>> sys(binom(n, 2), std::vector<Rat>(pairs.size(), Rat(0)));
  for (size_t col = 0; col < pairs.size(); ++col) {
    const Multivector prod =
        wedge(Multivector::from_vector(n, basis_.row(pairs[col][0] - 1)),
              Multivector::from_vector(n, basis_.row(pairs[col][1] - 1)));
    for (const auto& [idx, c] : prod.terms()) sys[wedge_basis_index(n, 2, idx)][col] = c;
  }
  const LinearSolution sol = solve_linear(Matrix::from_rows(sys), data.sigma.coords());
  if (!sol.consistent)
    throw std::logic_error("VertexQuotient: sigma not supported on the hyperplane");
  Multivector q(4, 2);
  for (size_t col = 0; col < pairs.size(); ++col) {
    if (pairs[col][0] == 1) continue;  // alpha-component dies in the quotient
    if (!sol.particular[col].is_zero())
      q.set_term({pairs[col][0] - 1, pairs[col][1] - 1},
                 q.coeff({pairs[col][0] - 1, pairs[col][1] - 1}) + sol.particular[col]);
  }
  if (wedge(q, q).is_zero())
    throw std::logic_error("VertexQuotient: quotient form is degenerate");
  sigma_q_ = std::move(q);
}

std::vector<Rat> VertexQuotient::coords_in_basis(const std::vector<Rat>& v) const {
  const LinearSolution sol = solve_linear(basis_.transpose(), v);
  if (!sol.consistent)
    throw std::invalid_argument("VertexQuotient: vector outside the hyperplane");
  return sol.particular;
}

Subspace VertexQuotient::map_plane(const Subspace& plane) const {
  if (!plane.includes(data_.alpha) || !data_.hyperplane.includes(plane))
    throw std::invalid_argument("VertexQuotient: plane not in the Schubert variety");
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < plane.dim(); ++i) {
    const std::vector<Rat> x = coords_in_basis(plane.basis_row(i));
    rows.push_back({x[1], x[2], x[3], x[4]});
  }
  return Subspace(4, Matrix::from_rows(rows));
}

}  // namespace exgr
