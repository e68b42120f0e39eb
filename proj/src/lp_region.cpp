#include "relfn/lp_region.hpp"

#include <algorithm>
#include <cmath>

#include "relfn/entropy.hpp"
#include "relfn/numerics.hpp"

namespace relfn {

double G(double alpha, double tau) {
  if (!(0.0 <= tau && tau <= alpha && alpha <= 0.5))
    throw domain_error("G: need 0 <= tau <= alpha <= 1/2");
  return 2.0 * (alpha * (1.0 - alpha) - tau * (1.0 - tau)) /
         (1.0 + 2.0 * std::sqrt(tau * (1.0 - tau)));
}

LPDistanceResult delta_bar(double R) {
  if (!(R > 0.0) || !(R < 1.0)) throw domain_error("delta_bar: rate outside (0,1)");
  const double alo = gv_distance(R);
  auto tau_of = [R](double a) {
    const double y = std::max(h(a) - 1.0 + R, 0.0);
    return h_inv(y);
  };
  auto objective = [&](double a) { return G(a, tau_of(a)); };
  const auto r = minimize_1d(objective, Interval(alo, 0.5), 512, 1e-12);
  LPDistanceResult out;
  out.argmin_alpha = r.arg;
  out.tau_of_alpha = tau_of(r.arg);
  out.delta_bar = r.value;
  return out;
}

double tau_nu(double nu, double xi) {
  const double gap = nu * (1.0 - nu) - xi * (1.0 - xi);
  if (gap < -1e-12) throw domain_error("tau_nu: nu(1-nu) < xi(1-xi)");
  const double inner = std::sqrt(std::max(gap, 0.0)) - xi;
  const double arg = 1.0 - 4.0 * inner * inner;
  if (arg < -1e-12) throw domain_error("tau_nu: outer square root argument negative");
  return 0.5 * (1.0 - std::sqrt(std::max(arg, 0.0)));
}

double R_bar(double delta) {
  if (!(delta > 0.0) || delta > 0.5) throw domain_error("R_bar: delta outside (0,1/2]");
  const double alo = 0.5 * (1.0 - std::sqrt(std::max(1.0 - 2.0 * delta, 0.0)));
  auto objective = [delta](double a) { return h(tau_nu(a, delta / 2.0)) - h(a); };
  const auto r = minimize_1d(objective, Interval(alo, 0.5), 512, 1e-12);
  return 1.0 + r.value;
}

}  // namespace relfn
