#pragma once

#include "relfn/errors.hpp"

// The linear-programming distance bound delta_bar(R), its building block
// G(alpha, tau), and the inverse rate function R_bar(delta).

namespace relfn {

struct LPDistanceResult {
  double delta_bar;      // minimized G(alpha, tau(alpha))
  double argmin_alpha;   // the minimizing alpha
  double tau_of_alpha;   // tau with h(tau) = h(alpha) - 1 + R at the argmin
};

/// G(alpha,tau) = 2(alpha(1-alpha) - tau(1-tau)) / (1 + 2 sqrt(tau(1-tau))).
double G(double alpha, double tau);

/// LP distance bound: minimize G(alpha, tau) over alpha in [h^{-1}(1-R), 1/2]
/// with tau pinned by h(tau) = h(alpha) - 1 + R.
LPDistanceResult delta_bar(double R);

/// tau_nu(xi) = (1 - sqrt(1 - 4 (sqrt(nu(1-nu) - xi(1-xi)) - xi)^2)) / 2.
/// Solves G(nu, tau) = 2*xi for tau.
double tau_nu(double nu, double xi);

/// Inverse of delta_bar:
///   R_bar(d) = 1 + min over alpha of (h(tau_alpha(d/2)) - h(alpha)),
/// alpha in [(1 - sqrt(1-2d))/2, 1/2].
double R_bar(double delta);

}  // namespace relfn
