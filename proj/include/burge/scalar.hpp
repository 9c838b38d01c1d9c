#pragma once

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>
#include <variant>

#include "burge/errors.hpp"

namespace burge {

using Rational = mpq_class;

// Max-plus extended real; -inf is the additive identity.
struct Tropical {
  double v = 0.0;
  constexpr Tropical() = default;
  constexpr explicit Tropical(double x) : v(x) {}
  friend bool operator==(Tropical a, Tropical b) { return a.v == b.v; }
};

// Positive real stored by its logarithm; geometric arithmetic without overflow.
struct LogReal {
  double log = 0.0;
  constexpr LogReal() = default;
  constexpr explicit LogReal(double l) : log(l) {}
  friend bool operator==(LogReal a, LogReal b) { return a.log == b.log; }
};

// First-order dual number v + d*eps.
struct Dual {
  double v = 0.0;
  double d = 0.0;
  constexpr Dual() = default;
  constexpr Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

  friend Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
  friend Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
  friend bool operator==(Dual a, Dual b) { return a.v == b.v && a.d == b.d; }
};

enum class Domain { geom_rational, geom_float, tropical };

std::string domain_name(Domain d);
Domain parse_domain(const std::string& name);

// Semiring-with-division structure for each scalar type.
template <class T>
struct semiring;

template <class T>
struct geometric_semiring {
  static constexpr bool geometric = true;

  static bool is_zero(const T& x) {
    if constexpr (std::is_same_v<T, Dual>) return x.v == 0;
    else return x == T(0);
  }
  static bool is_positive(const T& x) {
    if constexpr (std::is_same_v<T, Dual>) return x.v > 0;
    else return x > T(0);
  }

  static T corner() { return T(1) / T(2); }
  static T zero() { return T(0); }
  static T one() { return T(1); }

  static T oplus(const T& x, const T& y) { return T(x + y); }
  static T otimes(const T& x, const T& y) { return T(x * y); }
  static T odiv(const T& x, const T& y) {
    if (is_zero(y)) throw Error(Errc::division_by_zero_element, "geometric division by 0");
    return T(x / y);
  }
  static T hsum(const T& x, const T& y) {
    if (!is_positive(x) || !is_positive(y))
      throw Error(Errc::nonpositive_geometric_argument, "harmonic sum needs positive arguments");
    return T(T(1) / T(T(1) / x + T(1) / y));
  }
};

template <>
struct semiring<Rational> : geometric_semiring<Rational> {};
template <>
struct semiring<double> : geometric_semiring<double> {};
template <>
struct semiring<Dual> : geometric_semiring<Dual> {};

template <>
struct semiring<Tropical> {
  static constexpr bool geometric = false;
  static constexpr double ninf = -std::numeric_limits<double>::infinity();

  static bool is_zero(Tropical x) { return x.v == ninf; }
  static bool is_positive(Tropical) { return true; }

  static Tropical corner() { return Tropical(0.0); }
  static Tropical zero() { return Tropical(ninf); }
  static Tropical one() { return Tropical(0.0); }

  static Tropical oplus(Tropical x, Tropical y) { return Tropical(std::max(x.v, y.v)); }
  static Tropical otimes(Tropical x, Tropical y) {
    return (is_zero(x) || is_zero(y)) ? zero() : Tropical(x.v + y.v);
  }
  static Tropical odiv(Tropical x, Tropical y) {
    if (is_zero(y)) throw Error(Errc::division_by_zero_element, "tropical division by -inf");
    return is_zero(x) ? zero() : Tropical(x.v - y.v);
  }
  static Tropical hsum(Tropical x, Tropical y) {
    if (is_zero(x) || is_zero(y))
      throw Error(Errc::division_by_zero_element, "tropical harmonic sum with -inf");
    return Tropical(std::min(x.v, y.v));
  }
};

template <>
struct semiring<LogReal> {
  static constexpr bool geometric = true;
  static constexpr double ninf = -std::numeric_limits<double>::infinity();

  static double logaddexp(double a, double b) {
    if (a == ninf) return b;
    if (b == ninf) return a;
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
  }

  static bool is_zero(LogReal x) { return x.log == ninf; }
  static bool is_positive(LogReal x) { return !is_zero(x); }

  static LogReal corner() { return LogReal(-std::log(2.0)); }
  static LogReal zero() { return LogReal(ninf); }
  static LogReal one() { return LogReal(0.0); }

  static LogReal oplus(LogReal x, LogReal y) { return LogReal(logaddexp(x.log, y.log)); }
  static LogReal otimes(LogReal x, LogReal y) {
    return (is_zero(x) || is_zero(y)) ? zero() : LogReal(x.log + y.log);
  }
  static LogReal odiv(LogReal x, LogReal y) {
    if (is_zero(y)) throw Error(Errc::division_by_zero_element, "geometric division by 0");
    return is_zero(x) ? zero() : LogReal(x.log - y.log);
  }
  static LogReal hsum(LogReal x, LogReal y) {
    if (is_zero(x) || is_zero(y))
      throw Error(Errc::nonpositive_geometric_argument, "harmonic sum needs positive arguments");
    return LogReal(-logaddexp(-x.log, -y.log));
  }
};

template <class T>
inline T oplus(const T& x, const T& y) { return semiring<T>::oplus(x, y); }
template <class T>
inline T otimes(const T& x, const T& y) { return semiring<T>::otimes(x, y); }
template <class T>
inline T odiv(const T& x, const T& y) { return semiring<T>::odiv(x, y); }
template <class T>
inline T hsum(const T& x, const T& y) { return semiring<T>::hsum(x, y); }
template <class T>
inline T boundary_corner() { return semiring<T>::corner(); }
template <class T>
inline T boundary_zero() { return semiring<T>::zero(); }
template <class T>
inline T one() { return semiring<T>::one(); }

// Rationals as "p/q"; accepts plain integers on input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Runtime-dispatched scalar, for callers that only know the domain at run time.
using Value = std::variant<Rational, double, Tropical>;

Domain domain_of(const Value& v);
Value oplus(Domain d, const Value& x, const Value& y);
Value otimes(Domain d, const Value& x, const Value& y);
Value odiv(Domain d, const Value& x, const Value& y);
Value hsum(Domain d, const Value& x, const Value& y);
Value boundary_corner(Domain d);
Value boundary_zero(Domain d);
Value one(Domain d);

}  // namespace burge
