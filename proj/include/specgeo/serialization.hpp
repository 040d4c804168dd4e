#pragma once

#include <string>

#include <json.hpp>

#include "specgeo/geometry.hpp"
#include "specgeo/inverse.hpp"

namespace specgeo {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Scalar& s);
Json to_json(const Angle& a);
Json to_json(const PolygonSpec& spec);
Json to_json(const OrbisurfaceSpec& spec);
Json to_json(const AsymptoticSeries& series);
Json to_json(const RecoveredPolygon& rec);
Json to_json(const RecoveredOrbifold& rec);

Rational rational_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
Angle angle_from_json(const Json& j);
PolygonSpec polygon_from_json(const Json& j);
OrbisurfaceSpec orbisurface_from_json(const Json& j);
AsymptoticSeries series_from_json(const Json& j);

/// Fixed float formatting: 17 significant digits, lowercase exponent.
std::string format_double(double v);

}  // namespace specgeo
