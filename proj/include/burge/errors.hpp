#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burge {

enum class Errc {
  box_not_in_shape,
  missing_neighbor_box,
  coincident_indices,
  neighbor_target,
  not_self_conjugate,
  not_symmetric,
  non_rectangular_shape,
  invalid_shape,
  invalid_growth_sequence,
  index_outside_shape_and_boundary,
  domain_mismatch,
  division_by_zero_element,
  nonpositive_geometric_argument,
  empty_diagonal,
  size_limit_exceeded,
  not_persymmetric,
  unsupported_map,
  nonpositive_entry,
  nonpositive_parameter,
  empty_sample,
  unsupported_n,
  nonconvergent_quadrature,
  unknown_identity_name,
  tropical_domain_unsupported,
  inconsistent_n,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace burge
