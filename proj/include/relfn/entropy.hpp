#pragma once

#include "relfn/errors.hpp"

// Scalar information-theoretic functions and BSC channel constants.
// All quantities on the BSC side use base-2 logarithms (bits).

namespace relfn {

/// Binary entropy h(x) in bits, with 0*log(0) = 0.
double h(double x);

/// Inverse of h on the branch [0, 1/2].
double h_inv(double y);

/// Binary information divergence D(x||y) in bits. Requires 0 < y < 1.
double divergence(double x, double y);

/// Gilbert-Varshamov relative distance h^{-1}(1-R).
double gv_distance(double R);

/// h(1/2 - sqrt(x(1-x))).
double phi(double x);

// Crossover probability p with its derived constants:
//   u      = 2 sqrt(p(1-p))
//   rho    = sqrt(p) / (sqrt(p) + sqrt(1-p))
//   delta1 = 2 rho (1-rho)          (equivalently u/(1+u))
//   r_crit = 1 - h(rho)
//   r_x    = 1 - h(delta1)
struct ChannelBSC {
  double p;
  double u;
  double rho;
  double delta1;
  double r_crit;
  double r_x;
  explicit ChannelBSC(double p_);
  double capacity() const;  // 1 - h(p)
};

/// Pairwise error-rate exponent A(omega) = omega * log2(u). Always <= 0.
double pairwise_exponent_A(double omega, const ChannelBSC& ch);

}  // namespace relfn
