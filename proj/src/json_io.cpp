#include "exgr/json_io.hpp"

#include <stdexcept>

namespace exgr {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

void expect_object(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + ": expected an object");
}

}  // namespace

Json to_json(const Rat& r) { return Json(r.str()); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) bad("rational must be a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
  expect_object(j, "poly");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("poly: missing coeffs");
  std::vector<Rat> c;
  for (const Json& e : j["coeffs"]) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

Json to_json(const RatFunc& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  expect_object(j, "ratfunc");
  if (!j.contains("num")) bad("ratfunc: missing num");
  const Poly num = poly_from_json(j["num"]);
  const Poly den = j.contains("den") ? poly_from_json(j["den"]) : Poly::constant(1);
  return RatFunc(num, den);
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) data.push_back(to_json(m.at(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j) {
  expect_object(j, "matrix");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    bad("matrix: need rows, cols, data");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (!j["data"].is_array() || static_cast<int>(j["data"].size()) != rows * cols)
    bad("matrix: data length mismatch");
  std::vector<Rat> data;
  data.reserve(j["data"].size());
  for (const Json& e : j["data"]) data.push_back(rat_from_json(e));
  return Matrix(rows, cols, std::move(data));
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (const Rat& c : s.basis_row(i)) row.push_back(to_json(c));
    basis.push_back(row);
  }
  return Json{{"ambient", s.ambient()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  expect_object(j, "subspace");
  if (!j.contains("ambient") || !j.contains("basis")) bad("subspace: need ambient, basis");
  const int ambient = j["ambient"].get<int>();
  std::vector<std::vector<Rat>> rows;
  for (const Json& r : j["basis"]) {
    std::vector<Rat> row;
    for (const Json& e : r) row.push_back(rat_from_json(e));
    if (static_cast<int>(row.size()) != ambient) bad("subspace: row length mismatch");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Subspace(ambient);
  return Subspace(ambient, Matrix::from_rows(rows));
}

Json to_json(const Multivector& w) {
  Json terms = Json::array();
  for (const auto& [idx, c] : w.terms()) {
    Json t;
    t["idx"] = idx;
    t["coef"] = to_json(c);
    terms.push_back(t);
  }
  return Json{{"dim", w.dim()}, {"grade", w.grade()}, {"terms", terms}};
}

Multivector multivector_from_json(const Json& j) {
  expect_object(j, "multivector");
  if (!j.contains("dim") || !j.contains("grade") || !j.contains("terms"))
    bad("multivector: need dim, grade, terms");
  Multivector w(j["dim"].get<int>(), j["grade"].get<int>());
  for (const Json& t : j["terms"]) {
    if (!t.contains("idx") || !t.contains("coef")) bad("multivector: bad term");
    IndexSet idx = t["idx"].get<IndexSet>();
    w.set_term(idx, w.coeff(idx) + rat_from_json(t["coef"]));
  }
  return w;
}

Json to_json(const Center& z) {
  Json basis = Json::array();
  for (const Multivector& w : z.basis_multivectors()) basis.push_back(to_json(w));
  return Json{{"n", z.n()}, {"m", z.m()}, {"basis", basis}};
}

Center center_from_json(const Json& j) {
  expect_object(j, "center");
  if (!j.contains("n") || !j.contains("m") || !j.contains("basis"))
    bad("center: need n, m, basis");
  const int n = j["n"].get<int>();
  const int m = j["m"].get<int>();
  std::vector<Multivector> gens;
  for (const Json& g : j["basis"]) gens.push_back(multivector_from_json(g));
  if (gens.empty()) return Center(n, m, Subspace(static_cast<int>(binom(n, m))));
  return Center::from_spanning(n, m, gens);
}

Json to_json(const Odo& l) {
  Json coeffs = Json::array();
  for (const RatFunc& c : l.coeffs) coeffs.push_back(to_json(c));
  return Json{{"order", l.order}, {"coeffs", coeffs}};
}

Odo odo_from_json(const Json& j) {
  expect_object(j, "odo");
  if (!j.contains("order") || !j.contains("coeffs")) bad("odo: need order, coeffs");
  Odo l;
  l.order = j["order"].get<int>();
  for (const Json& c : j["coeffs"]) l.coeffs.push_back(ratfunc_from_json(c));
  return l;
}

Json to_json(const Realization& s) {
  return Json{{"A", to_json(s.a)}, {"B", to_json(s.b)}, {"C", to_json(s.c)}};
}

Realization realization_from_json(const Json& j) {
  expect_object(j, "realization");
  if (!j.contains("A") || !j.contains("B") || !j.contains("C"))
    bad("realization: need A, B, C");
  Realization s{matrix_from_json(j["A"]), matrix_from_json(j["B"]),
                matrix_from_json(j["C"])};
  validate(s);
  return s;
}

std::vector<std::vector<Rat>> vectors_from_json(const Json& j) {
  expect_object(j, "vectors");
  if (!j.contains("vectors") || !j["vectors"].is_array()) bad("vectors: missing list");
  std::vector<std::vector<Rat>> out;
  for (const Json& r : j["vectors"]) {
    std::vector<Rat> v;
    for (const Json& e : r) v.push_back(rat_from_json(e));
    out.push_back(std::move(v));
  }
  return out;
}

Json to_json(const HitchinData& data) {
  return Json{{"k", to_json(data.k)}, {"lambda", to_json(data.lambda)}};
}

Json to_json(const O5Data& data) {
  return Json{{"alpha", to_json(data.alpha)},
              {"hyperplane", to_json(data.hyperplane)},
              {"sigma", to_json(data.sigma)}};
}

Json to_json(const OrbitReport& rep) {
  Json j{{"orbit", to_string(rep.label)},
         {"wedge_kernel", to_json(rep.wedge_kernel)},
         {"hitchin", to_json(rep.hitchin)}};
  if (rep.o5) j["o5"] = to_json(*rep.o5);
  return j;
}

Json to_json(const LineTypeResult& res) {
  Json j{{"type", res.type}};
  if (res.shared_alpha) j["shared_alpha"] = to_json(*res.shared_alpha);
  if (res.common_sigma) j["common_sigma"] = to_json(*res.common_sigma);
  if (res.alpha1) j["alpha1"] = to_json(*res.alpha1);
  if (res.alpha2) j["alpha2"] = to_json(*res.alpha2);
  if (res.shared_hyperplane) j["shared_hyperplane"] = to_json(*res.shared_hyperplane);
  return j;
}

Json to_json(const SelfAdjointVerdict& v) {
  Json j{{"status", to_string(v.status)}};
  if (v.sigma) j["sigma"] = to_json(*v.sigma);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.witness_orbit) j["witness_orbit"] = to_string(*v.witness_orbit);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.sample_orbits.empty()) {
    Json orbits = Json::array();
    for (OrbitLabel o : v.sample_orbits) orbits.push_back(to_string(o));
    j["sample_orbits"] = orbits;
  }
  if (v.e_spans) j["e_spans"] = *v.e_spans;
  if (v.f_spans) j["f_spans"] = *v.f_spans;
  return j;
}

Json to_json(const VertexMapsReport& v) {
  Json j{{"all_o5", v.all_o5}};
  if (v.offending) {
    j["offending"] = to_json(*v.offending);
    j["offending_orbit"] = to_string(*v.offending_orbit);
    return j;
  }
  Json alphas = Json::array();
  for (const Subspace& a : v.alphas) alphas.push_back(to_json(a));
  Json planes = Json::array();
  for (const Subspace& h : v.hyperplanes) planes.push_back(to_json(h));
  j["alphas"] = alphas;
  j["hyperplanes"] = planes;
  j["e_spans"] = v.e_spans;
  j["f_spans"] = v.f_spans;
  return j;
}

Json to_json(const DoubleCoverReport& rep) {
  return Json{{"trials", rep.trials},
              {"passes", rep.passes},
              {"lagrangian", rep.lagrangian},
              {"failures", rep.failures}};
}

Json to_json(const FiberResult& res) {
  Json partners = Json::array();
  for (const PluckerPoint& p : res.partners) partners.push_back(to_json(p.mv()));
  Json planes = Json::array();
  for (const Subspace& s : res.partner_planes) planes.push_back(to_json(s));
  return Json{{"partners", partners},
              {"partner_planes", planes},
              {"tangency_mult", res.tangency_mult},
              {"nonrational_roots", res.nonrational_roots}};
}

Json to_json(const HermannMartinCurve& curve) {
  Json coeffs = Json::array();
  for (const Multivector& c : curve.coeffs) coeffs.push_back(to_json(c));
  return Json{{"n", curve.n}, {"m", curve.m}, {"degree", curve.degree()}, {"coeffs", coeffs}};
}

Json to_json(const PpCenter& pc) {
  Json j{{"x", to_json(pc.x)},
         {"z", to_json(pc.z)},
         {"dim_x", pc.x.dim()},
         {"dim_z", pc.z.dim()},
         {"proper", pc.proper}};
  if (pc.decomposable_witness) j["decomposable_witness"] = to_json(*pc.decomposable_witness);
  return j;
}

Json to_json(const TransferFunction& tf) {
  Json num = Json::array();
  for (int i = 0; i < tf.num.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < tf.num.cols(); ++j) row.push_back(to_json(tf.num.at(i, j)));
    num.push_back(row);
  }
  return Json{{"num", num}, {"den", to_json(tf.den)}};
}

Json to_json(const CenterBuild& cb) {
  return Json{{"x", to_json(cb.x)},
              {"dim_x", cb.x.dim()},
              {"z", to_json(cb.z)},
              {"dim_z", cb.z.dim()}};
}

}  // namespace exgr
