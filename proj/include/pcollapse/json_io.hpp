// JSON encodings of the library's value types.
//
// Arbitrary-precision integers are decimal strings and rationals are "num/den"
// strings, so nothing is lost above 64 bits. Machine-sized counters (period,
// degree, order, t) are plain JSON numbers.
#pragma once

#include <json.hpp>

#include "pcollapse/arith.hpp"
#include "pcollapse/criteria.hpp"
#include "pcollapse/polytopes.hpp"
#include "pcollapse/precursive.hpp"
#include "pcollapse/quasipoly.hpp"

namespace pcollapse {

using json = nlohmann::json;

json to_json(const QuadNumber& x);
QuadNumber quad_from_json(const json& j);

json to_json(const TrianglePair& pair);
TrianglePair triangle_pair_from_json(const json& j);

json to_json(const RationalTriangleParams& params);
RationalTriangleParams rational_params_from_json(const json& j);

json to_json(const AxisSimplex& simplex);
AxisSimplex axis_simplex_from_json(const json& j);

json to_json(const Quasipolynomial& qp);
Quasipolynomial quasipolynomial_from_json(const json& j);

json to_json(const CriterionReport& report);
CriterionReport criterion_report_from_json(const json& j);

json to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const json& j);

json to_json(const SeriesNumerator& g);
json to_json(const ReciprocityReport& report);

}  // namespace pcollapse
