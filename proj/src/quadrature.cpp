#include "burge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "burge/errors.hpp"

namespace burge {

namespace {

// Kronrod 15-point nodes and weights with the embedded 7-point Gauss rule (QUADPACK qk15).
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * wgk[7], g = fc * wg[3], abs_k = std::abs(fc) * wgk[7];
  double fv[15];
  fv[7] = fc;
  for (int i = 0; i < 7; ++i) {
    const double f1 = f(c - h * xgk[i]), f2 = f(c + h * xgk[i]);
    fv[i] = f1;
    fv[14 - i] = f2;
    k += wgk[i] * (f1 + f2);
    abs_k += wgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g += wg[i / 2] * (f1 + f2);
  }
  const double mean = 0.5 * k;
  double asc = wgk[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i) asc += wgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  asc *= h;
  double err = std::abs((k - g) * h);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  err = std::max(err, 50.0 * 2.2e-16 * abs_k * h);
  return {a, b, k * h, err};
}

void fail_if_nonfinite(const Panel& p) {
  if (!std::isfinite(p.value)) {
    std::ostringstream msg;
    msg << "integrand not finite on [" << p.a << ", " << p.b << "]";
    throw Error(Errc::nonconvergent_quadrature, msg.str());
  }
}

// Global adaptive refinement: bisect the worst panel until the summed error
// estimate is below rel_tol times the total.
double refine(const Integrand& f, std::vector<Panel> panels, const QuadOptions& opts) {
  std::priority_queue<Panel> heap(panels.begin(), panels.end());
  double total = 0.0, err = 0.0;
  for (const Panel& p : panels) {
    fail_if_nonfinite(p);
    total += p.value;
    err += p.error;
  }
  const std::size_t limit = std::size_t{1} << std::min(opts.max_depth, 16u);
  std::size_t splits = 0;
  while (!heap.empty() && err > opts.rel_tol * std::abs(total) && err > 1e-300) {
    if (++splits > limit) {
      std::ostringstream msg;
      msg << "error estimate " << err << " against total " << total << " after " << limit << " bisections";
      throw Error(Errc::nonconvergent_quadrature, msg.str());
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    fail_if_nonfinite(l);
    fail_if_nonfinite(r);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Recompute from the panels to avoid drift from the running updates.
  std::vector<Panel> final_panels;
  while (!heap.empty()) {
    final_panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(final_panels.begin(), final_panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double sum = 0.0;
  for (const Panel& p : final_panels) sum += p.value;
  return sum;
}

void split_into(const Integrand& f, double a, double b, double width, std::vector<Panel>& out) {
  if (!(b > a)) return;
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  for (int k = 0; k < pieces; ++k) out.push_back(gk15(f, a + (b - a) * k / pieces, a + (b - a) * (k + 1) / pieces));
}

}  // namespace

double integrate_interval(const Integrand& f, double a, double b, const QuadOptions& opts) {
  if (!(b > a)) return 0.0;
  std::vector<Panel> panels;
  split_into(f, a, b, opts.panel_width, panels);
  return refine(f, std::move(panels), opts);
}

double integrate_line(const Integrand& f, const QuadOptions& opts, double hint, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  hint = std::clamp(hint, lo, hi);

  double center = hint, peak = -1.0;
  for (double u = hint - opts.scan_halfwidth; u <= hint + opts.scan_halfwidth; u += opts.scan_step) {
    if (u < lo || u > hi) continue;
    const double v = std::abs(f(u));
    if (std::isfinite(v) && v > peak) {
      peak = v;
      center = u;
    }
  }

  const double w = opts.panel_width;
  std::vector<Panel> panels;
  split_into(f, std::max(lo, center - w), std::min(hi, center + w), w, panels);
  double total = 0.0;
  for (const Panel& p : panels) total += p.value;

  auto widen = [&](int dir) {
    for (double half = w;; half *= 2) {
      double a = center + dir * half, b = center + dir * 2 * half;
      if (dir < 0) std::swap(a, b);
      a = std::max(a, lo);
      b = std::min(b, hi);
      if (!(b > a)) return;
      const std::size_t first = panels.size();
      split_into(f, a, b, w, panels);
      double panel = 0.0;
      for (std::size_t i = first; i < panels.size(); ++i) panel += std::abs(panels[i].value) + panels[i].error;
      for (std::size_t i = first; i < panels.size(); ++i) total += panels[i].value;
      if (dir > 0 ? b >= hi : a <= lo) return;
      if (panel <= opts.tail_tol * std::abs(total)) return;
      if (2 * half > opts.max_halfwidth) {
        std::ostringstream msg;
        msg << "tail beyond " << 2 * half << " of the peak at " << center << " still contributes " << panel;
        throw Error(Errc::nonconvergent_quadrature, msg.str());
      }
    }
  };
  widen(+1);
  widen(-1);
  return refine(f, std::move(panels), opts);
}

}  // namespace burge
