#include "burge/jacobian.hpp"

#include <cmath>

#include "burge/correspondences.hpp"

namespace burge {

JacobianMap parse_jacobian_map(const std::string& name) {
  if (name == "identity") return JacobianMap::identity;
  if (name == "grsk") return JacobianMap::grsk;
  if (name == "gburge") return JacobianMap::gburge;
  if (name == "gschutz") return JacobianMap::gschutz;
  if (name == "gburge_up") return JacobianMap::gburge_up;
  throw Error(Errc::unsupported_map, name);
}

namespace {

std::vector<Box> coordinates(JacobianMap map, const Shape& shape) {
  return map == JacobianMap::gburge_up ? upper_part(shape) : shape.boxes();
}

template <class T>
std::vector<T> evaluate(JacobianMap map, const Shape& shape, const std::vector<Box>& coords, const std::vector<T>& x) {
  if (map == JacobianMap::gburge_up) {
    UpperArray<T> up(shape, one<T>());
    for (std::size_t i = 0; i < coords.size(); ++i) up.at(coords[i]) = x[i];
    up = gburge_up(std::move(up));
    std::vector<T> out;
    for (const Box& b : coords) out.push_back(up.at(b));
    return out;
  }
  ShapedArray<T> w(shape, one<T>());
  for (std::size_t i = 0; i < coords.size(); ++i) w.at(coords[i]) = x[i];
  switch (map) {
    case JacobianMap::identity: break;
    case JacobianMap::grsk: w = grsk(std::move(w)); break;
    case JacobianMap::gburge: w = gburge(std::move(w)); break;
    case JacobianMap::gschutz: w = gschutz(std::move(w)); break;
    case JacobianMap::gburge_up: break;
  }
  std::vector<T> out;
  for (const Box& b : coords) out.push_back(w.at(b));
  return out;
}

}  // namespace

JacobianMatrix loglog_jacobian(JacobianMap map, const ShapedArray<double>& w, DiffMode mode, double h) {
  const Shape& shape = w.shape();
  if (map == JacobianMap::gschutz) require_rectangular(shape);
  const std::vector<Box> coords = coordinates(map, shape);
  const std::size_t n = coords.size();
  std::vector<double> x;
  for (const Box& b : coords) {
    if (!(w.at(b) > 0)) throw Error(Errc::nonpositive_entry, to_string(b));
    x.push_back(w.at(b));
  }
  JacobianMatrix jac(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    if (mode == DiffMode::forward_dual) {
      // d/du_b with w_b = exp(u_b) seeds the derivative w_b.
      std::vector<Dual> xd;
      for (std::size_t i = 0; i < n; ++i) xd.emplace_back(x[i], i == col ? x[i] : 0.0);
      const std::vector<Dual> t = evaluate(map, shape, coords, xd);
      for (std::size_t row = 0; row < n; ++row) jac(row, col) = t[row].d / t[row].v;
    } else {
      std::vector<double> plus = x, minus = x;
      plus[col] = x[col] * std::exp(h);
      minus[col] = x[col] * std::exp(-h);
      const std::vector<double> tp = evaluate(map, shape, coords, plus);
      const std::vector<double> tm = evaluate(map, shape, coords, minus);
      for (std::size_t row = 0; row < n; ++row) jac(row, col) = (std::log(tp[row]) - std::log(tm[row])) / (2 * h);
    }
  }
  return jac;
}

double abs_det(const JacobianMatrix& j) {
  if (j.rows() != j.cols()) throw Error(Errc::invalid_shape, "determinant of a non-square matrix");
  if (j.rows() == 0) return 1.0;
  return std::abs(j.partialPivLu().determinant());
}

}  // namespace burge
