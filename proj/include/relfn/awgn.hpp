#pragma once

#include <optional>

#include "relfn/errors.hpp"

// Gaussian-channel reliability bounds. All rates and exponents on this side
// are in NATS (natural logarithms throughout).

namespace relfn {

// Signal-to-noise ratio a with derived constants:
//   r_x     = (1/2) ln(1/2 + (1/2) sqrt(1 + a^2/4))
//   theta_x = arccos sqrt(1 - e^{-2 r_x})
//   r_crit  = (1/2) ln(1/2 + a/4 + (1/2) sqrt(1 + a^2/4))
struct ChannelAWGN {
  double a;
  double r_x;
  double theta_x;
  double r_crit;
  explicit ChannelAWGN(double a_);
};

/// Rate of a spherical code packed at minimal angle theta:
///   psi(x) = -((1-sin x)/(2 sin x)) ln((1-sin x)/(1+sin x)) - ln(2 sin x/(1+sin x)).
/// Defined on [1e-6, pi/2]; diverges as theta -> 0.
double psi(double theta);

/// Inverse of psi: the root of psi(theta) = R on (0, pi/2].
double theta_bar(double R);

/// Random-coding exponent (a/4)(1 - cos theta_x) + r_x - R.
double E0_awgn(double R, const ChannelAWGN& ch);

/// Union-bound exponent (a/4)(1 - cos theta_bar) - ln sin theta_bar - R.
double EU_awgn(double R, const ChannelAWGN& ch);

/// Root of R + ln sin theta_bar(R) = (a/8)(1 - cos theta_bar(R)) on
/// (0.001, r_crit]; nullopt when the root lies outside that window.
std::optional<double> r_star(const ChannelAWGN& ch);

struct AWGNLandmarks {
  double a = 0;
  double r_x = 0, theta_x = 0, r_crit = 0, r1 = 0;  // rates in nats
  double r_star = 0;       // meaningful only when r_star_found
  bool r_star_found = false;
  bool e0_tight = false;   // r1 <= r_star, decided by the live condition sign
};
AWGNLandmarks landmarks_awgn(const ChannelAWGN& ch);

}  // namespace relfn
