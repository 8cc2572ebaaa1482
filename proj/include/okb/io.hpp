// JSON payloads. Every number is written exactly: rationals as "p/q"
// strings, quadratic numbers as {"a": "p/q", "b": "p/q", "n": radicand}.
#pragma once

#include "okb/lattice.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"
#include "okb/quadratic.hpp"
#include "okb/zariski.hpp"

#include <json.hpp>

namespace okb {

using json = nlohmann::json;

json to_json(const Rational& value);
Rational rational_from_json(const json& j);

json to_json(const QuadraticNumber& value);
QuadraticNumber quadratic_from_json(const json& j);

/// {"n": int, "d": "p/q", "m": ["p/q", ...]}
json to_json(const DivisorClass& c);
DivisorClass divisor_class_from_json(const json& j);

/// {"n": int, "conjectural": bool, "vertices": [[x, y], ...]}
json polygon_to_json(long n, const RationalPolygon& p);
json polygon_to_json(long n, const QuadraticPolygon& p);

template <typename Scalar>
struct PolygonPayload {
  long n = 0;
  Polygon<Scalar> polygon;
};

PolygonPayload<Rational> rational_polygon_from_json(const json& j);
PolygonPayload<QuadraticNumber> quadratic_polygon_from_json(const json& j);

/// {"input": class, "positive": class, "negative": [{"curve": class, "coeff": "p/q"}]}
json to_json(const ZariskiDecomposition& z);

/// Array of polygon payloads ordered by n.
json to_json(const Dissection& d);

}  // namespace okb
