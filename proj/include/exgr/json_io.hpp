#pragma once

#include <json.hpp>

#include "exgr/fixtures.hpp"
#include "exgr/grass.hpp"
#include "exgr/orbits.hpp"
#include "exgr/poly.hpp"
#include "exgr/selfadj.hpp"
#include "exgr/syscon.hpp"
#include "exgr/wronski.hpp"

namespace exgr {

using Json = nlohmann::ordered_json;

// Wire schemas (all coefficients are "p/q" strings with q > 0, lowest terms):
//   Multivector {"dim":n,"grade":k,"terms":[{"idx":[...],"coef":"p/q"},...]}
//   Matrix      {"rows":r,"cols":c,"data":["p/q",... row-major]}
//   Poly        {"coeffs":["p/q",...]}       low degree first, [] for zero
//   RatFunc     {"num":Poly,"den":Poly}
//   Subspace    {"ambient":d,"basis":[[...],...]}
//   Center      {"n":n,"m":m,"basis":[Multivector,...]}
//   Odo         {"order":n,"coeffs":[RatFunc,...]}
//   Realization {"A":Matrix,"B":Matrix,"C":Matrix}
//   Vectors     {"vectors":[["p/q",...],...]}

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json to_json(const Multivector& w);
Multivector multivector_from_json(const Json& j);

Json to_json(const Center& z);
Center center_from_json(const Json& j);

Json to_json(const Odo& l);
Odo odo_from_json(const Json& j);

Json to_json(const Realization& s);
Realization realization_from_json(const Json& j);

std::vector<std::vector<Rat>> vectors_from_json(const Json& j);

Json to_json(const OrbitReport& rep);
Json to_json(const O5Data& data);
Json to_json(const HitchinData& data);
Json to_json(const LineTypeResult& res);
Json to_json(const SelfAdjointVerdict& v);
Json to_json(const VertexMapsReport& v);
Json to_json(const DoubleCoverReport& rep);
Json to_json(const FiberResult& res);
Json to_json(const HermannMartinCurve& curve);
Json to_json(const PpCenter& pc);
Json to_json(const TransferFunction& tf);
Json to_json(const CenterBuild& cb);

}  // namespace exgr
