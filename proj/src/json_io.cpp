#include "burge/json_io.hpp"

#include <cmath>

namespace burge {

json scalar_to_json(const Rational& q) { return format_rational(q); }
json scalar_to_json(double x) { return x; }
json scalar_to_json(Tropical x) {
  if (std::isinf(x.v) && x.v < 0) return "-inf";
  return x.v;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::parse_error, "rational entries must be \"p/q\" strings, got " + j.dump());
}

double float_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  throw Error(Errc::parse_error, "float entries must be numbers, got " + j.dump());
}

Tropical tropical_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return boundary_zero<Tropical>();
  if (j.is_number()) return Tropical(j.get<double>());
  throw Error(Errc::parse_error, "tropical entries must be numbers or \"-inf\", got " + j.dump());
}

json shape_to_json(const Shape& s) { return s.parts(); }

Shape shape_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "shape must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::parse_error, "shape must be an array of integers");
    parts.push_back(x.get<int>());
  }
  return Shape(parts);
}

json growth_to_json(const GrowthSequence& g) {
  json out = json::array();
  for (const Box& b : g.boxes) out.push_back({b.row, b.col});
  return out;
}

GrowthSequence growth_from_json(const json& j) {
  GrowthSequence g;
  if (!j.is_array()) throw Error(Errc::parse_error, "growth order must be a list of [i,j] pairs");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw Error(Errc::parse_error, "growth order must be a list of [i,j] pairs");
    g.boxes.push_back(Box{p[0].get<int>(), p[1].get<int>()});
  }
  return g;
}

namespace {

template <class T, class F>
ShapedArray<T> read_rows(const Shape& shape, const json& rows, F convert) {
  if (!rows.is_array()) throw Error(Errc::parse_error, "rows must be an array of arrays");
  std::vector<std::vector<T>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw Error(Errc::parse_error, "rows must be an array of arrays");
    out.emplace_back();
    for (const auto& x : r) out.back().push_back(convert(x));
  }
  return ShapedArray<T>(shape, out);
}

Shape shape_of_json_rows(const json& rows) {
  if (!rows.is_array()) throw Error(Errc::parse_error, "rows must be an array of arrays");
  std::vector<int> parts;
  for (const auto& r : rows) {
    if (!r.is_array()) throw Error(Errc::parse_error, "rows must be an array of arrays");
    parts.push_back(static_cast<int>(r.size()));
  }
  return Shape(parts);
}

// Rational unless some entry is a non-integer number.
Domain infer_domain(const json& rows) {
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.is_number_float()) return Domain::geom_float;
  return Domain::geom_rational;
}

}  // namespace

AnyArray array_from_json(const json& j) {
  const bool bare = j.is_array();
  if (!bare && !(j.is_object() && j.contains("rows")))
    throw Error(Errc::parse_error, "array JSON is a list of rows or an object with \"rows\"");
  const json& rows = bare ? j : j.at("rows");
  const Shape shape = !bare && j.contains("shape") ? shape_from_json(j.at("shape")) : shape_of_json_rows(rows);
  const Domain d = !bare && j.contains("domain") ? parse_domain(j.at("domain").get<std::string>()) : infer_domain(rows);
  switch (d) {
    case Domain::geom_rational: return read_rows<Rational>(shape, rows, rational_from_json);
    case Domain::geom_float: return read_rows<double>(shape, rows, float_from_json);
    case Domain::tropical: return read_rows<Tropical>(shape, rows, tropical_from_json);
  }
  throw Error(Errc::parse_error, "unknown domain");
}

json to_json(const AnyArray& a) {
  return std::visit([](const auto& w) { return to_json(w); }, a);
}

}  // namespace burge
