#include "relfn/poly_exponents.hpp"

#include <cmath>

#include "relfn/entropy.hpp"
#include "relfn/numerics.hpp"

namespace relfn {

namespace {
constexpr double kDiscClamp = 1e-12;
}

LPPoint::LPPoint(double alpha_, double tau_, double R) : alpha(alpha_), tau(tau_) {
  if (alpha < 0.0 || alpha > 0.5) throw domain_error("LPPoint: alpha outside [0,1/2]");
  if (tau < 0.0 || tau > alpha + 1e-12) throw domain_error("LPPoint: need 0 <= tau <= alpha");
  if (h(tau) > h(alpha) - 1.0 + R + 1e-9)
    throw domain_error("LPPoint: h(tau) exceeds h(alpha) - 1 + R");
}

double krawtchouk_exponent_k(double tau, double omega, double quad_tol) {
  if (tau < 0.0 || tau > 0.5) throw domain_error("krawtchouk_exponent_k: tau outside [0,1/2]");
  const double edge = 0.5 - std::sqrt(tau * (1.0 - tau));
  if (omega < 0.0 || omega > edge + 1e-12)
    throw domain_error("krawtchouk_exponent_k: omega outside [0, 1/2 - sqrt(tau(1-tau))]");
  omega = std::min(omega, edge);
  if (omega == 0.0) return h(tau);
  const double c = 1.0 - 2.0 * tau;
  auto integrand = [c](double z) {
    double disc = c * c - 4.0 * z * (1.0 - z);
    if (disc < 0.0) {
      if (disc < -kDiscClamp) throw numeric_error("krawtchouk_exponent_k: negative discriminant");
      disc = 0.0;
    }
    return std::log2((c + std::sqrt(disc)) / (2.0 * (1.0 - z)));
  };
  return h(tau) + integrate(integrand, Interval(0.0, omega), quad_tol);
}

double hahn_exponent_q(double alpha, double tau, double omega, double quad_tol) {
  if (alpha <= 0.0 || alpha > 0.5) throw domain_error("hahn_exponent_q: alpha outside (0,1/2]");
  if (tau < 0.0 || tau >= alpha) {
    if (!(tau == alpha && omega == 0.0))
      throw domain_error("hahn_exponent_q: need 0 <= tau < alpha");
  }
  if (omega < 0.0 || omega > alpha)
    throw domain_error("hahn_exponent_q: omega outside [0, alpha]");
  if (omega == 0.0) return h(tau);
  const double c0 = alpha * (1.0 - alpha) - tau * (1.0 - tau);
  auto integrand = [alpha, c0](double y) {
    const double P = c0 - y * (1.0 - 2.0 * y);
    const double Q = (alpha - y) * (1.0 - alpha - y);
    double disc = P * P - 4.0 * Q * y * y;
    if (disc < 0.0) {
      if (disc < -kDiscClamp) throw numeric_error("hahn_exponent_q: negative discriminant");
      disc = 0.0;
    }
    return std::log2((P + std::sqrt(disc)) / (2.0 * Q));
  };
  return h(tau) + integrate(integrand, Interval(0.0, omega), quad_tol);
}

}  // namespace relfn
