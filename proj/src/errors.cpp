#include "burge/errors.hpp"

namespace burge {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::box_not_in_shape: return "box-not-in-shape";
    case Errc::missing_neighbor_box: return "missing-neighbor-box";
    case Errc::coincident_indices: return "coincident-indices";
    case Errc::neighbor_target: return "neighbor-target";
    case Errc::not_self_conjugate: return "not-self-conjugate";
    case Errc::not_symmetric: return "not-symmetric";
    case Errc::non_rectangular_shape: return "non-rectangular-shape";
    case Errc::invalid_shape: return "invalid-shape";
    case Errc::invalid_growth_sequence: return "invalid-growth-sequence";
    case Errc::index_outside_shape_and_boundary: return "index-outside-shape-and-boundary";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::division_by_zero_element: return "division-by-zero-element";
    case Errc::nonpositive_geometric_argument: return "nonpositive-geometric-argument";
    case Errc::empty_diagonal: return "empty-diagonal";
    case Errc::size_limit_exceeded: return "size-limit-exceeded";
    case Errc::not_persymmetric: return "not-persymmetric";
    case Errc::unsupported_map: return "unsupported-map";
    case Errc::nonpositive_entry: return "nonpositive-entry";
    case Errc::nonpositive_parameter: return "nonpositive-parameter";
    case Errc::empty_sample: return "empty-sample";
    case Errc::unsupported_n: return "unsupported-n";
    case Errc::nonconvergent_quadrature: return "nonconvergent-quadrature";
    case Errc::unknown_identity_name: return "unknown-identity-name";
    case Errc::tropical_domain_unsupported: return "tropical-domain-unsupported";
    case Errc::inconsistent_n: return "inconsistent-n";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown-error";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace burge
