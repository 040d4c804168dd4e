#include "specgeo/serialization.hpp"

#include <cstdio>

#include "specgeo/errors.hpp"

namespace specgeo {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json to_json(const Rational& r) {
  return Json{{"num", r.num_string()}, {"den", r.den_string()}};
}

Json to_json(const Scalar& s) {
  if (!s.exact()) return Json{{"real", s.to_double()}};
  Json terms = Json::array();
  for (const auto& [h, c] : s.poly().terms()) {
    Json t = to_json(c);
    t["pi_half_exp"] = h;
    terms.push_back(t);
  }
  return Json{{"terms", terms}};
}

Json to_json(const Angle& a) {
  if (a.is_exact()) return Json{{"pi_num", a.p()}, {"pi_den", a.q()}};
  return Json{{"rad", a.value()}};
}

Json to_json(const PolygonSpec& spec) {
  Json angles = Json::array();
  for (const auto& a : spec.angles) angles.push_back(to_json(a));
  return Json{{"kappa", to_json(spec.kappa)},
              {"area", to_json(spec.area)},
              {"perimeter", to_json(spec.perimeter)},
              {"angles", angles}};
}

Json to_json(const OrbisurfaceSpec& spec) {
  return Json{{"kappa", to_json(spec.kappa)},
              {"area", to_json(spec.area)},
              {"mirror_length", to_json(spec.mirror_length)},
              {"cone_orders", spec.cone_orders},
              {"dihedral_half_orders", spec.dihedral_half_orders}};
}

Json to_json(const AsymptoticSeries& series) {
  Json coeffs = Json::array();
  for (const auto& [n, c] : series.coefficients) {
    Json entry = Json{{"n", n}, {"c", to_json(c)}};
    coeffs.push_back(entry);
  }
  return Json{{"min_n", series.min_n},
              {"max_n", series.max_n},
              {"kappa", to_json(series.kappa)},
              {"coefficients", coeffs}};
}

Json to_json(const RecoveredPolygon& rec) {
  Json angles = Json::array();
  for (const auto& ra : rec.angles)
    angles.push_back(Json{{"angle", to_json(ra.angle)},
                          {"multiplicity", ra.multiplicity}});
  return Json{{"area", to_json(rec.area)},
              {"perimeter", to_json(rec.perimeter)},
              {"curvature", to_json(rec.curvature)},
              {"angles", angles},
              {"euler_char", rec.euler_char},
              {"diagnostics", rec.diagnostics}};
}

Json to_json(const RecoveredOrbifold& rec) {
  return Json{{"area", to_json(rec.area)},
              {"mirror_length", to_json(rec.mirror_length)},
              {"curvature", to_json(rec.curvature)},
              {"orders", rec.orders},
              {"diagnostics", rec.diagnostics}};
}

Rational rational_from_json(const Json& j) {
  return Rational::from_decimal_string(j.at("num").get<std::string>(),
                                       j.at("den").get<std::string>());
}

Scalar scalar_from_json(const Json& j) {
  if (j.contains("real")) return Scalar(j.at("real").get<double>());
  PiPoly p;
  for (const auto& t : j.at("terms"))
    p += PiPoly::monomial(rational_from_json(t), t.at("pi_half_exp").get<int>());
  return Scalar(p);
}

Angle angle_from_json(const Json& j) {
  if (j.contains("rad")) return Angle::radians(j.at("rad").get<double>());
  return Angle::exact(j.at("pi_num").get<long>(), j.at("pi_den").get<long>());
}

PolygonSpec polygon_from_json(const Json& j) {
  PolygonSpec spec;
  spec.kappa = scalar_from_json(j.at("kappa"));
  spec.area = scalar_from_json(j.at("area"));
  spec.perimeter = scalar_from_json(j.at("perimeter"));
  for (const auto& a : j.at("angles")) spec.angles.push_back(angle_from_json(a));
  return spec;
}

OrbisurfaceSpec orbisurface_from_json(const Json& j) {
  OrbisurfaceSpec spec;
  spec.kappa = scalar_from_json(j.at("kappa"));
  spec.area = scalar_from_json(j.at("area"));
  spec.mirror_length = scalar_from_json(j.at("mirror_length"));
  spec.cone_orders = j.at("cone_orders").get<std::vector<long>>();
  spec.dihedral_half_orders = j.at("dihedral_half_orders").get<std::vector<long>>();
  return spec;
}

AsymptoticSeries series_from_json(const Json& j) {
  AsymptoticSeries s;
  s.min_n = j.at("min_n").get<int>();
  s.max_n = j.at("max_n").get<int>();
  s.kappa = scalar_from_json(j.at("kappa"));
  for (const auto& entry : j.at("coefficients"))
    s.coefficients[entry.at("n").get<int>()] = scalar_from_json(entry.at("c"));
  return s;
}

}  // namespace specgeo
