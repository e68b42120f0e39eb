#include "relfn/entropy.hpp"

#include <cmath>

#include "relfn/numerics.hpp"

namespace relfn {

double h(double x) {
  if (x < 0.0 || x > 1.0) throw domain_error("h: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double h_inv(double y) {
  if (y < 0.0 || y > 1.0) throw domain_error("h_inv: argument outside [0,1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  return find_root([y](double x) { return h(x) - y; }, Interval(0.0, 0.5), 1e-14);
}

double divergence(double x, double y) {
  if (x < 0.0 || x > 1.0) throw domain_error("divergence: x outside [0,1]");
  if (y <= 0.0 || y >= 1.0) throw domain_error("divergence: y outside (0,1)");
  double d = 0.0;
  if (x > 0.0) d += x * std::log2(x / y);
  if (x < 1.0) d += (1.0 - x) * std::log2((1.0 - x) / (1.0 - y));
  return d;
}

double gv_distance(double R) {
  if (R < 0.0 || R > 1.0) throw domain_error("gv_distance: rate outside [0,1]");
  return h_inv(1.0 - R);
}

double phi(double x) {
  if (x < 0.0 || x > 1.0) throw domain_error("phi: argument outside [0,1]");
  return h(0.5 - std::sqrt(x * (1.0 - x)));
}

ChannelBSC::ChannelBSC(double p_) : p(p_) {
  if (!(p > 0.0) || !(p < 0.5))
    throw domain_error("ChannelBSC: crossover probability must be in (0, 1/2)");
  u = 2.0 * std::sqrt(p * (1.0 - p));
  rho = std::sqrt(p) / (std::sqrt(p) + std::sqrt(1.0 - p));
  delta1 = 2.0 * rho * (1.0 - rho);
  r_crit = 1.0 - h(rho);
  r_x = 1.0 - h(delta1);
}

double ChannelBSC::capacity() const { return 1.0 - h(p); }

double pairwise_exponent_A(double omega, const ChannelBSC& ch) {
  if (omega < 0.0 || omega > 1.0)
    throw domain_error("pairwise_exponent_A: omega outside [0,1]");
  return omega * std::log2(ch.u);
}

}  // namespace relfn
