#include "pcollapse/json_io.hpp"

namespace pcollapse {

namespace {

Integer integer_from(const json& j) {
  const auto text = j.get<std::string>();
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) throw std::invalid_argument("bad integer string: " + text);
  return z;
}

json rational_rows(const std::vector<std::vector<Rational>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json encoded = json::array();
    for (const auto& x : row) encoded.push_back(to_string(x));
    out.push_back(std::move(encoded));
  }
  return out;
}

std::vector<std::vector<Rational>> rational_rows_from(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> decoded;
    for (const auto& x : row) decoded.push_back(parse_rational(x.get<std::string>()));
    rows.push_back(std::move(decoded));
  }
  return rows;
}

}  // namespace

json to_json(const QuadNumber& x) {
  return json{{"a_num", to_string(Integer(x.a().get_num()))},
              {"a_den", to_string(Integer(x.a().get_den()))},
              {"b_num", to_string(Integer(x.b().get_num()))},
              {"b_den", to_string(Integer(x.b().get_den()))},
              {"d", to_string(x.radicand())}};
}

QuadNumber quad_from_json(const json& j) {
  const Rational a = make_rational(integer_from(j.at("a_num")), integer_from(j.at("a_den")));
  const Rational b = make_rational(integer_from(j.at("b_num")), integer_from(j.at("b_den")));
  return QuadNumber::normalize(a, b, integer_from(j.at("d")));
}

json to_json(const TrianglePair& pair) {
  return json{{"u", to_json(pair.u)}, {"v", to_json(pair.v)}, {"class", to_string(pair.kind)}};
}

TrianglePair triangle_pair_from_json(const json& j) {
  TrianglePair pair = TrianglePair::make(quad_from_json(j.at("u")), quad_from_json(j.at("v")));
  if (j.contains("class") && parse_pair_class(j.at("class").get<std::string>()) != pair.kind) {
    throw std::invalid_argument("triangle class does not match u, v");
  }
  return pair;
}

json to_json(const RationalTriangleParams& params) {
  return json{{"p", to_string(params.p)}, {"q", to_string(params.q)}, {"r", to_string(params.r)},
              {"s", to_string(params.s)}};
}

RationalTriangleParams rational_params_from_json(const json& j) {
  return RationalTriangleParams::make(integer_from(j.at("p")), integer_from(j.at("q")), integer_from(j.at("r")),
                                      integer_from(j.at("s")));
}

json to_json(const AxisSimplex& simplex) {
  json legs = json::array();
  for (const auto& leg : simplex.legs) legs.push_back(to_json(leg));
  return json{{"dim", simplex.dim()}, {"legs", std::move(legs)}};
}

AxisSimplex axis_simplex_from_json(const json& j) {
  std::vector<QuadNumber> legs;
  for (const auto& leg : j.at("legs")) legs.push_back(quad_from_json(leg));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != legs.size()) {
    throw std::invalid_argument("simplex dim does not match leg count");
  }
  return AxisSimplex::make(std::move(legs));
}

json to_json(const Quasipolynomial& qp) {
  return json{{"period", qp.period}, {"degree", qp.degree}, {"coeffs", rational_rows(qp.coeffs)}};
}

Quasipolynomial quasipolynomial_from_json(const json& j) {
  Quasipolynomial qp{j.at("period").get<std::int64_t>(), j.at("degree").get<int>(),
                     rational_rows_from(j.at("coeffs"))};
  if (qp.period < 1 || qp.coeffs.size() != static_cast<std::size_t>(qp.period)) {
    throw std::invalid_argument("quasipolynomial needs one constituent per residue");
  }
  for (const auto& row : qp.coeffs) {
    if (row.size() != static_cast<std::size_t>(qp.degree) + 1) {
      throw std::invalid_argument("constituent length does not match degree");
    }
  }
  return qp;
}

json to_json(const CriterionReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions) conditions.push_back(json{{"name", c.name}, {"holds", c.holds}});
  json divisor = nullptr;
  if (report.predicted_period_divisor) divisor = to_string(*report.predicted_period_divisor);
  return json{{"conditions", std::move(conditions)},
              {"predicted_period_divisor", std::move(divisor)},
              {"verdict", to_string(report.verdict)}};
}

CriterionReport criterion_report_from_json(const json& j) {
  CriterionReport report;
  for (const auto& c : j.at("conditions")) {
    report.conditions.push_back(Condition{c.at("name").get<std::string>(), c.at("holds").get<bool>()});
  }
  if (!j.at("predicted_period_divisor").is_null()) {
    report.predicted_period_divisor = integer_from(j.at("predicted_period_divisor"));
  }
  report.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return report;
}

json to_json(const Recurrence& rec) {
  return json{{"order", rec.order}, {"degree", rec.degree}, {"polys", rational_rows(rec.polys)}};
}

Recurrence recurrence_from_json(const json& j) {
  Recurrence rec{j.at("order").get<int>(), j.at("degree").get<int>(), rational_rows_from(j.at("polys"))};
  if (rec.polys.size() != static_cast<std::size_t>(rec.order) + 1) {
    throw std::invalid_argument("recurrence needs order+1 polynomials");
  }
  return rec;
}

json to_json(const SeriesNumerator& g) {
  return json{{"a0", to_string(g.a0)}, {"a1", to_string(g.a1)}, {"a2", to_string(g.a2)}};
}

json to_json(const ReciprocityReport& report) {
  return json{{"t", report.t},
              {"lhs", to_string(report.lhs)},
              {"interior", to_string(report.interior)},
              {"mu_observed", to_string(report.mu_observed)},
              {"alpha_divides_t", report.alpha_divides_t}};
}

}  // namespace pcollapse
