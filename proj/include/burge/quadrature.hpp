#pragma once

#include <functional>
#include <limits>

namespace burge {

using Integrand = std::function<double(double)>;

struct QuadOptions {
  double rel_tol = 1e-10;      // per-panel Gauss-Kronrod tolerance
  double tail_tol = 1e-10;     // stop widening once a tail panel is below this fraction of the total
  unsigned max_depth = 20;     // bisection depth per panel
  double scan_halfwidth = 32;  // window searched for the peak
  double scan_step = 2.0;
  double panel_width = 4.0;
  double max_halfwidth = 256;  // tails wider than this are reported as nonconvergent
};

// Adaptive G7-K15 on a finite interval.
double integrate_interval(const Integrand& f, double a, double b, const QuadOptions& opts = {});

// Integral over [lo, hi], either bound possibly infinite. The integrand is
// expected to be concentrated near its peak, which is located by scanning
// around `hint`; infinite sides are widened by doubling panels until the tail
// contribution is negligible.
double integrate_line(const Integrand& f, const QuadOptions& opts = {}, double hint = 0.0,
                      double lo = -std::numeric_limits<double>::infinity(),
                      double hi = std::numeric_limits<double>::infinity());

}  // namespace burge
