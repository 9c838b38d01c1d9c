#pragma once

#include <json.hpp>
#include <variant>

#include "burge/array.hpp"

namespace burge {

using json = nlohmann::json;

json scalar_to_json(const Rational& q);
json scalar_to_json(double x);
json scalar_to_json(Tropical x);

Rational rational_from_json(const json& j);
double float_from_json(const json& j);
Tropical tropical_from_json(const json& j);

template <class T>
Domain domain_tag();
template <>
inline Domain domain_tag<Rational>() { return Domain::geom_rational; }
template <>
inline Domain domain_tag<double>() { return Domain::geom_float; }
template <>
inline Domain domain_tag<Tropical>() { return Domain::tropical; }

json shape_to_json(const Shape& s);
Shape shape_from_json(const json& j);

// [[i,j], ...]
json growth_to_json(const GrowthSequence& g);
GrowthSequence growth_from_json(const json& j);

template <class T>
json to_json(const ShapedArray<T>& w) {
  json rows = json::array();
  for (int i = 1; i <= w.rows(); ++i) {
    json r = json::array();
    for (const T& x : w.row(i)) r.push_back(scalar_to_json(x));
    rows.push_back(std::move(r));
  }
  return json{{"shape", shape_to_json(w.shape())}, {"domain", domain_name(domain_tag<T>())}, {"rows", rows}};
}

using AnyArray = std::variant<ShapedArray<Rational>, ShapedArray<double>, ShapedArray<Tropical>>;

AnyArray array_from_json(const json& j);
json to_json(const AnyArray& a);

}  // namespace burge
