#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burge/correspondences.hpp"
#include "burge/json_io.hpp"

namespace burge {

struct VerifyOptions {
  int max_size = 4;
  int trials = 50;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  Domain domain = Domain::geom_rational;
  int threads = 1;
};

struct IdentityReport {
  std::string identity;
  std::string statement;
  int trials = 0;
  int failures = 0;
  std::optional<json> first_counterexample;  // {input, lhs, rhs, note?}
  bool passed() const { return failures == 0; }
};

json to_json(const IdentityReport& r);

const std::vector<std::string>& identity_names();

// Trial t draws its inputs from CounterRng(seed, t); the report does not
// depend on the number of threads.
IdentityReport verify_identity(const std::string& name, const VerifyOptions& opts);

// Both sides of sigma_{p,q} rho_{p,q+1} tau_{p,q} = tau_{p,q+1} rho_{p,q} sigma_{p-1,q} e^{p,q+1}_{p,q}.
template <class T>
std::pair<ShapedArray<T>, ShapedArray<T>> prop33_sides(const ShapedArray<T>& w, int p, int q);

// (p,q) with (p,q), (p,q+1), (p-1,q) all in the shape.
std::vector<Box> prop33_admissible(const Shape& shape);

// The 21-map composition for m >= 1, q >= 3, which should be the identity.
template <class T>
ShapedArray<T> appendix_composition(ShapedArray<T> w, int m, int q);

}  // namespace burge
