#pragma once

#include <Eigen/Dense>
#include <string>

#include "burge/array.hpp"

namespace burge {

// J(a, b) = d log t_a / d log w_b, boxes enumerated row-major (upper boxes
// only for gburge_up).
using JacobianMatrix = Eigen::MatrixXd;

enum class JacobianMap { identity, grsk, gburge, gschutz, gburge_up };
enum class DiffMode { forward_dual, central_difference };

JacobianMap parse_jacobian_map(const std::string& name);

JacobianMatrix loglog_jacobian(JacobianMap map, const ShapedArray<double>& w, DiffMode mode = DiffMode::forward_dual,
                               double h = 1e-5);

// |det| from an LU factorization with partial pivoting.
double abs_det(const JacobianMatrix& j);

}  // namespace burge
