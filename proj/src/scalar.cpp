#include "burge/scalar.hpp"

namespace burge {

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::geom_rational: return "geom-rational";
    case Domain::geom_float: return "geom-float";
    case Domain::tropical: return "tropical";
  }
  return "unknown";
}

Domain parse_domain(const std::string& name) {
  if (name == "geom-rational") return Domain::geom_rational;
  if (name == "geom-float") return Domain::geom_float;
  if (name == "tropical") return Domain::tropical;
  throw Error(Errc::parse_error, "unknown domain '" + name + "'");
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw Error(Errc::parse_error, "not a rational: '" + text + "'");
  if (q.get_den() == 0) throw Error(Errc::parse_error, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Domain domain_of(const Value& v) {
  switch (v.index()) {
    case 0: return Domain::geom_rational;
    case 1: return Domain::geom_float;
    default: return Domain::tropical;
  }
}

namespace {

template <class Op>
Value dispatch(Domain d, const Value& x, const Value& y, Op op) {
  if (domain_of(x) != d || domain_of(y) != d)
    throw Error(Errc::domain_mismatch, "operands not in " + domain_name(d));
  return std::visit(
      [&](const auto& a) -> Value {
        using T = std::decay_t<decltype(a)>;
        return op(a, std::get<T>(y));
      },
      x);
}

}  // namespace

Value oplus(Domain d, const Value& x, const Value& y) {
  return dispatch(d, x, y, [](const auto& a, const auto& b) { return oplus(a, b); });
}
Value otimes(Domain d, const Value& x, const Value& y) {
  return dispatch(d, x, y, [](const auto& a, const auto& b) { return otimes(a, b); });
}
Value odiv(Domain d, const Value& x, const Value& y) {
  return dispatch(d, x, y, [](const auto& a, const auto& b) { return odiv(a, b); });
}
Value hsum(Domain d, const Value& x, const Value& y) {
  return dispatch(d, x, y, [](const auto& a, const auto& b) { return hsum(a, b); });
}

Value boundary_corner(Domain d) {
  switch (d) {
    case Domain::geom_rational: return boundary_corner<Rational>();
    case Domain::geom_float: return boundary_corner<double>();
    default: return boundary_corner<Tropical>();
  }
}
Value boundary_zero(Domain d) {
  switch (d) {
    case Domain::geom_rational: return boundary_zero<Rational>();
    case Domain::geom_float: return boundary_zero<double>();
    default: return boundary_zero<Tropical>();
  }
}
Value one(Domain d) {
  switch (d) {
    case Domain::geom_rational: return one<Rational>();
    case Domain::geom_float: return one<double>();
    default: return one<Tropical>();
  }
}

}  // namespace burge
