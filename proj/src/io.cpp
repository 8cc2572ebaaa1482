#include "okb/io.hpp"

#include <stdexcept>

namespace okb {

json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const QuadraticNumber& value) {
  return json{{"a", to_json(value.rational_part())}, {"b", to_json(value.radical_part())}, {"n", value.radicand()}};
}

QuadraticNumber quadratic_from_json(const json& j) {
  if (!j.is_object()) return QuadraticNumber(rational_from_json(j));
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b")), j.at("n").get<std::int64_t>()};
}

json to_json(const DivisorClass& c) {
  json m = json::array();
  for (int i = 1; i <= c.n(); ++i) m.push_back(to_json(c.m(i)));
  return json{{"n", c.n()}, {"d", to_json(c.d())}, {"m", std::move(m)}};
}

DivisorClass divisor_class_from_json(const json& j) {
  std::vector<Rational> m;
  for (const json& x : j.at("m")) m.push_back(rational_from_json(x));
  DivisorClass out(rational_from_json(j.at("d")), m);
  if (j.contains("n") && j.at("n").get<int>() != out.n()) {
    throw std::invalid_argument("class payload n does not match its multiplicity count");
  }
  return out;
}

namespace {

template <typename Scalar>
json polygon_json(long n, const Polygon<Scalar>& p) {
  json vertices = json::array();
  for (const Point<Scalar>& v : p.vertices()) vertices.push_back(json::array({to_json(v.x), to_json(v.y)}));
  return json{{"n", n}, {"conjectural", p.conjectural()}, {"vertices", std::move(vertices)}};
}

template <typename Scalar, typename Parse>
PolygonPayload<Scalar> polygon_from(const json& j, Parse parse) {
  std::vector<Point<Scalar>> pts;
  for (const json& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw std::invalid_argument("polygon vertex must be a pair");
    pts.push_back({parse(v[0]), parse(v[1])});
  }
  return {j.at("n").get<long>(), Polygon<Scalar>::hull(std::move(pts), j.value("conjectural", false))};
}

}  // namespace

json polygon_to_json(long n, const RationalPolygon& p) { return polygon_json(n, p); }
json polygon_to_json(long n, const QuadraticPolygon& p) { return polygon_json(n, p); }

PolygonPayload<Rational> rational_polygon_from_json(const json& j) {
  return polygon_from<Rational>(j, rational_from_json);
}

PolygonPayload<QuadraticNumber> quadratic_polygon_from_json(const json& j) {
  return polygon_from<QuadraticNumber>(j, quadratic_from_json);
}

json to_json(const ZariskiDecomposition& z) {
  json negative = json::array();
  for (const NegativeComponent& c : z.negative) {
    negative.push_back({{"curve", to_json(c.curve.divisor_class())}, {"coeff", to_json(c.coefficient)}});
  }
  return json{{"input", to_json(z.input)}, {"positive", to_json(z.positive)}, {"negative", std::move(negative)}};
}

json to_json(const Dissection& d) {
  json out = json::array();
  for (const DissectionEntry& e : d.bodies) out.push_back(polygon_to_json(e.n, e.body));
  return out;
}

}  // namespace okb
