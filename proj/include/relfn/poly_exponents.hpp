#pragma once

#include "relfn/errors.hpp"

// Exponents (1/n) log2 of Krawtchouk and Hahn polynomial values along the
// diagonal K_{tau n}(omega n), H^{alpha n}_{tau n}(omega n).

namespace relfn {

// A feasible (alpha, tau) pair for a given rate: tau <= alpha and
// h(tau) <= h(alpha) - 1 + R.
struct LPPoint {
  double alpha;
  double tau;
  LPPoint(double alpha_, double tau_, double R);
};

/// Exponent of the binary Krawtchouk polynomial, valid on
/// 0 <= omega <= 1/2 - sqrt(tau(1-tau)).
double krawtchouk_exponent_k(double tau, double omega, double quad_tol = 1e-9);

/// Exponent of the Hahn polynomial,
///   q(alpha,tau,omega) = h(tau) + int_0^omega log2[(P + sqrt(P^2-4Qy^2))/(2Q)] dy
/// with P = alpha(1-alpha) - tau(1-tau) - y(1-2y), Q = (alpha-y)(1-alpha-y).
/// Requires omega <= alpha; a discriminant that goes negative beyond the
/// floating-point clamp tolerance raises numeric_error.
double hahn_exponent_q(double alpha, double tau, double omega, double quad_tol = 1e-9);

}  // namespace relfn
