#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "relfn/errors.hpp"

// One-dimensional numerical primitives shared by all bound computations:
// adaptive quadrature, bracketed maximization, and bisection root-finding.
// All routines are pure and reentrant.

namespace relfn {

struct Interval {
  double lo;
  double hi;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
      throw domain_error("Interval: need finite lo <= hi");
  }
  double width() const { return hi - lo; }
};

struct OptimResult {
  double arg = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

namespace detail {

constexpr int kMaxQuadDepth = 80;

inline double simpson_segment(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_rec(F& f, double a, double m, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth,
                            double full_width, long& evals) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = simpson_segment(a, m, fa, flm, fm);
  const double right = simpson_segment(m, b, fm, frm, fb);
  const double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  // Interval too narrow to split further in floating point: accept if finite.
  if (b - a < 1e-14 * full_width || lm <= a || rm >= b) {
    const double v = left + right + err / 15.0;
    if (std::isfinite(v)) return v;
    throw numeric_error("integrate: non-finite integrand in unresolvable subinterval");
  }
  if (depth >= kMaxQuadDepth) {
    // Square-root-type endpoint behaviour converges slower than the tolerance
    // halving; tolerate a bounded overshoot at the recursion floor.
    if (std::abs(err) <= 1e4 * 15.0 * tol && std::isfinite(err))
      return left + right + err / 15.0;
    throw numeric_error("integrate: no convergence at maximum subdivision depth");
  }
  return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth + 1,
                              full_width, evals) +
         adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth + 1,
                              full_width, evals);
}

}  // namespace detail

/// Adaptive-Simpson integral of f over iv with absolute tolerance tol.
/// Integrable square-root endpoint behaviour is handled by subdivision.
template <class F>
double integrate(F&& f, Interval iv, double tol = 1e-9) {
  if (!(tol > 0.0)) throw domain_error("integrate: tol must be positive");
  if (iv.width() == 0.0) return 0.0;
  const double a = iv.lo, b = iv.hi, m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  long evals = 3;
  const double whole = detail::simpson_segment(a, b, fa, fm, fb);
  return detail::adaptive_simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 0,
                                      iv.width(), evals);
}

/// Coarse grid scan followed by golden-section refinement around the best
/// grid cell. Ties are broken toward the smaller argument.
template <class F>
OptimResult maximize_1d(F&& f, Interval iv, int grid = 512, double refine_tol = 1e-9) {
  if (grid < 16) throw domain_error("maximize_1d: grid must be >= 16");
  OptimResult out;
  if (iv.width() == 0.0) {
    out.arg = iv.lo;
    out.value = f(iv.lo);
    out.evaluations = 1;
    return out;
  }
  long evals = 0;
  double best_x = iv.lo;
  double best_v = -std::numeric_limits<double>::infinity();
  auto consider = [&](double x, double v) {
    if (v > best_v || (v == best_v && x < best_x)) {
      best_v = v;
      best_x = x;
    }
  };
  const double step = iv.width() / (grid - 1);
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i == grid - 1) ? iv.hi : iv.lo + i * step;
    const double v = f(x);
    ++evals;
    if (v > best_v) best_i = i;
    consider(x, v);
  }
  double a = std::max(iv.lo, iv.lo + (best_i - 1) * step);
  double b = std::min(iv.hi, iv.lo + (best_i + 1) * step);
  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  evals += 2;
  consider(c, fc);
  consider(d, fd);
  while (b - a > refine_tol && d > c) {
    if (fc >= fd) {  // keep the left half on ties
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
    ++evals;
  }
  out.arg = best_x;
  out.value = best_v;
  out.evaluations = evals;
  return out;
}

/// Minimization by negation; OptimResult.value is the (un-negated) minimum.
template <class F>
OptimResult minimize_1d(F&& f, Interval iv, int grid = 512, double refine_tol = 1e-9) {
  auto r = maximize_1d([&](double x) { return -f(x); }, iv, grid, refine_tol);
  r.value = -r.value;
  return r;
}

/// Bisection root of f on iv; requires f(lo) and f(hi) of opposite sign
/// (or zero). Returns the bracket midpoint once its width is <= tol.
template <class F>
double find_root(F&& f, Interval iv, double tol = 1e-12) {
  double a = iv.lo, b = iv.hi;
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw domain_error("find_root: endpoints bracket no sign change");
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace relfn
