#include "relfn/awgn.hpp"

#include <cmath>

#include "relfn/numerics.hpp"

namespace relfn {

namespace {
constexpr double kThetaMin = 1e-6;
const double kHalfPi = std::acos(-1.0) / 2.0;

// left side minus right side of the union-bound validity condition
double validity_condition(double R, const ChannelAWGN& ch) {
  const double t = theta_bar(R);
  return R + std::log(std::sin(t)) - ch.a / 8.0 * (1.0 - std::cos(t));
}
}  // namespace

ChannelAWGN::ChannelAWGN(double a_) : a(a_) {
  if (!(a > 0.0)) throw domain_error("ChannelAWGN: signal-to-noise ratio must be positive");
  const double s = std::sqrt(1.0 + a * a / 4.0);
  r_x = 0.5 * std::log(0.5 + 0.5 * s);
  theta_x = std::acos(std::sqrt(1.0 - std::exp(-2.0 * r_x)));
  r_crit = 0.5 * std::log(0.5 + a / 4.0 + 0.5 * s);
}

double psi(double theta) {
  if (theta < kThetaMin || theta > kHalfPi + 1e-12)
    throw domain_error("psi: theta outside [1e-6, pi/2]");
  const double s = std::sin(std::min(theta, kHalfPi));
  const double one_m = 1.0 - s;
  const double t1 = one_m <= 0.0 ? 0.0 : -(one_m / (2.0 * s)) * std::log(one_m / (1.0 + s));
  return t1 - std::log(2.0 * s / (1.0 + s));
}

double theta_bar(double R) {
  if (!(R > 0.0)) throw domain_error("theta_bar: rate must be positive");
  if (R >= psi(kThetaMin)) throw domain_error("theta_bar: rate beyond the psi range");
  return find_root([R](double t) { return psi(t) - R; }, Interval(kThetaMin, kHalfPi),
                   1e-13);
}

double E0_awgn(double R, const ChannelAWGN& ch) {
  return ch.a / 4.0 * (1.0 - std::cos(ch.theta_x)) + ch.r_x - R;
}

double EU_awgn(double R, const ChannelAWGN& ch) {
  const double t = theta_bar(R);
  return ch.a / 4.0 * (1.0 - std::cos(t)) - std::log(std::sin(t)) - R;
}

std::optional<double> r_star(const ChannelAWGN& ch) {
  const double lo = 1e-3, hi = ch.r_crit;
  if (hi <= lo) return std::nullopt;
  const double flo = validity_condition(lo, ch);
  const double fhi = validity_condition(hi, ch);
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  return find_root([&](double R) { return validity_condition(R, ch); }, Interval(lo, hi),
                   1e-12);
}

AWGNLandmarks landmarks_awgn(const ChannelAWGN& ch) {
  AWGNLandmarks lm;
  lm.a = ch.a;
  lm.r_x = ch.r_x;
  lm.theta_x = ch.theta_x;
  lm.r_crit = ch.r_crit;
  lm.r1 = psi(ch.theta_x);
  if (const auto rs = r_star(ch)) {
    lm.r_star = *rs;
    lm.r_star_found = true;
  }
  // The condition is increasing in R; its sign at r1 decides r1 <= r_star even
  // when the root itself lies beyond r_crit.
  lm.e0_tight = validity_condition(lm.r1, ch) <= 0.0;
  return lm;
}

}  // namespace relfn
