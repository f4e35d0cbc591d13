#include "exgr/multivector.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace exgr {

bool is_strictly_increasing(const IndexSet& idx) {
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] >= idx[i]) return false;
  return true;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<IndexSet> make_basis(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct BasisCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<IndexSet>> sets;
  std::map<std::pair<int, int>, std::map<IndexSet, int>> ranks;
};

BasisCache& cache() {
  static BasisCache c;
  return c;
}

}  // namespace

const std::vector<IndexSet>& wedge_basis(int n, int k) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(n, k);
  auto it = c.sets.find(key);
  if (it == c.sets.end()) {
    it = c.sets.emplace(key, make_basis(n, k)).first;
    std::map<IndexSet, int> r;
    for (size_t i = 0; i < it->second.size(); ++i)
      r[it->second[i]] = static_cast<int>(i);
    c.ranks.emplace(key, std::move(r));
  }
  return it->second;
}

int wedge_basis_index(int n, int k, const IndexSet& idx) {
  wedge_basis(n, k);  // ensure cached
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  const auto& r = c.ranks.at({n, k});
  auto it = r.find(idx);
  if (it == r.end()) throw std::invalid_argument("wedge_basis_index: bad index set");
  return it->second;
}

Multivector::Multivector(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || grade < 0) throw std::invalid_argument("Multivector: bad shape");
}

Multivector Multivector::basis_element(int dim, const IndexSet& idx) {
  Multivector w(dim, static_cast<int>(idx.size()));
  w.set_term(idx, Rat(1));
  return w;
}

Multivector Multivector::from_vector(int dim, const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != dim)
    throw std::invalid_argument("Multivector: vector size mismatch");
  Multivector w(dim, 1);
  for (int i = 0; i < dim; ++i)
    if (!coords[i].is_zero()) w.terms_[{i + 1}] = coords[i];
  return w;
}

Multivector Multivector::scalar(int dim, const Rat& c) {
  Multivector w(dim, 0);
  if (!c.is_zero()) w.terms_[{}] = c;
  return w;
}

Multivector Multivector::from_coords(int dim, int grade, const std::vector<Rat>& coords) {
  const auto& basis = wedge_basis(dim, grade);
  if (coords.size() != basis.size())
    throw std::invalid_argument("Multivector: coordinate size mismatch");
  Multivector w(dim, grade);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) w.terms_[basis[i]] = coords[i];
  return w;
}

Rat Multivector::coeff(const IndexSet& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Multivector::set_term(const IndexSet& idx, const Rat& c) {
  if (static_cast<int>(idx.size()) != grade_)
    throw std::invalid_argument("Multivector: index set grade mismatch");
  if (!is_strictly_increasing(idx) || (!idx.empty() && (idx.front() < 1 || idx.back() > dim_)))
    throw std::invalid_argument("Multivector: invalid index set");
  if (c.is_zero())
    terms_.erase(idx);
  else
    terms_[idx] = c;
}

std::vector<Rat> Multivector::coords() const {
  const auto& basis = wedge_basis(dim_, grade_);
  std::vector<Rat> v(basis.size(), Rat(0));
  for (const auto& [idx, c] : terms_) v[wedge_basis_index(dim_, grade_, idx)] = c;
  return v;
}

Rat Multivector::leading_coeff() const {
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Multivector Multivector::operator-() const {
  Multivector w(dim_, grade_);
  for (const auto& [idx, c] : terms_) w.terms_[idx] = -c;
  return w;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (a.dim_ != b.dim_ || a.grade_ != b.grade_)
    throw std::invalid_argument("Multivector: shape mismatch in +");
  Multivector w = a;
  for (const auto& [idx, c] : b.terms_) {
    Rat s = w.coeff(idx) + c;
    if (s.is_zero())
      w.terms_.erase(idx);
    else
      w.terms_[idx] = s;
  }
  return w;
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator*(const Rat& c, const Multivector& w) {
  Multivector out(w.dim_, w.grade_);
  if (c.is_zero()) return out;
  for (const auto& [idx, x] : w.terms_) out.terms_[idx] = c * x;
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*e[";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "]";
    first = false;
  }
  return os.str();
}

std::optional<std::pair<IndexSet, int>> merge_index_sets(const IndexSet& a,
                                                         const IndexSet& b) {
  IndexSet merged;
  merged.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a
      inversions += static_cast<long>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  return std::make_pair(std::move(merged), inversions % 2 == 0 ? 1 : -1);
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  const int grade = std::min(a.grade() + b.grade(), a.dim());
  Multivector out(a.dim(), grade);
  if (a.grade() + b.grade() > a.dim()) return out;  // overflow clamps to zero
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto merged = merge_index_sets(ia, ib);
      if (!merged) continue;
      const Rat term = ca * cb * Rat(merged->second);
      const Rat s = out.coeff(merged->first) + term;
      out.set_term(merged->first, s);
    }
  }
  return out;
}

Multivector contract(const Multivector& phi, const Multivector& w) {
  if (phi.dim() != w.dim()) throw std::invalid_argument("contract: dimension mismatch");
  if (phi.grade() != 1) throw std::invalid_argument("contract: phi must have grade 1");
  if (w.grade() == 0) return Multivector(w.dim(), 0);
  Multivector out(w.dim(), w.grade() - 1);
  for (const auto& [idx, c] : w.terms()) {
    for (size_t pos = 0; pos < idx.size(); ++pos) {
      const Rat p = phi.coeff({idx[pos]});
      if (p.is_zero()) continue;
      IndexSet rest;
      rest.reserve(idx.size() - 1);
      for (size_t t = 0; t < idx.size(); ++t)
        if (t != pos) rest.push_back(idx[t]);
      const Rat sign = (pos % 2 == 0) ? Rat(1) : Rat(-1);
      out.set_term(rest, out.coeff(rest) + sign * p * c);
    }
  }
  return out;
}

Multivector contract_basis(const IndexSet& dual, const Multivector& w) {
  Multivector out = w;
  for (int j : dual) {
    if (out.grade() == 0) return Multivector(w.dim(), 0);
    out = contract(Multivector::basis_element(w.dim(), {j}), out);
  }
  return out;
}

Rat top_pairing(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("top_pairing: dimension mismatch");
  if (a.grade() + b.grade() != a.dim())
    throw std::invalid_argument("top_pairing: grades not complementary");
  Rat acc(0);
  for (const auto& [ia, ca] : a.terms()) {
    // complement of ia in 1..n
    IndexSet comp;
    comp.reserve(b.grade());
    size_t p = 0;
    for (int i = 1; i <= a.dim(); ++i) {
      if (p < ia.size() && ia[p] == i) {
        ++p;
        continue;
      }
      comp.push_back(i);
    }
    const Rat cb = b.coeff(comp);
    if (cb.is_zero()) continue;
    acc += ca * cb * Rat(merge_index_sets(ia, comp)->second);
  }
  return acc;
}

Multivector apply_gl(const Matrix& g, const Multivector& w) {
  if (g.rows() != w.dim() || g.cols() != w.dim())
    throw std::invalid_argument("apply_gl: matrix shape mismatch");
  Multivector out(w.dim(), std::min(w.grade(), w.dim()));
  for (const auto& [idx, c] : w.terms()) {
    Multivector prod = Multivector::scalar(w.dim(), Rat(1));
    for (int i : idx) prod = wedge(prod, Multivector::from_vector(w.dim(), g.col(i - 1)));
    out = out + c * prod;
  }
  return out;
}

bool proportional(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim() || a.grade() != b.grade()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  const Rat denom = b.coeff(a.terms().begin()->first);
  if (denom.is_zero()) return false;
  const Rat c = a.terms().begin()->second / denom;
  return a == c * b;
}

Multivector normalize_projective(const Multivector& w) {
  if (w.is_zero()) throw std::invalid_argument("normalize_projective: zero multivector");
  return (Rat(1) / w.leading_coeff()) * w;
}

Matrix wedge_map(const Multivector& w) {
  const int n = w.dim();
  const int out_grade = std::min(w.grade() + 1, n);
  const long rows = binom(n, out_grade);
  Matrix m(static_cast<int>(rows), n);
  if (w.grade() + 1 > n) return m;
  for (int j = 1; j <= n; ++j) {
    const Multivector img = wedge(Multivector::basis_element(n, {j}), w);
    for (const auto& [idx, c] : img.terms())
      m.at(wedge_basis_index(n, out_grade, idx), j - 1) = c;
  }
  return m;
}

Matrix contract_map(const Multivector& w) {
  const int n = w.dim();
  if (w.grade() == 0) throw std::invalid_argument("contract_map: grade-0 input");
  const int out_grade = w.grade() - 1;
  Matrix m(static_cast<int>(binom(n, out_grade)), n);
  for (int j = 1; j <= n; ++j) {
    const Multivector img = contract(Multivector::basis_element(n, {j}), w);
    for (const auto& [idx, c] : img.terms())
      m.at(wedge_basis_index(n, out_grade, idx), j - 1) = c;
  }
  return m;
}

}  // namespace exgr
