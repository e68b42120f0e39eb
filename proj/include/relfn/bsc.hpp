#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relfn/entropy.hpp"

// BSC error-exponent bounds: the classical exponents, the distance-distribution
// exponent mu, the overlap exponent B, the older and newer composite upper
// bounds (registry names thm3 / thm6), threshold rates, the straight-line
// construction, and the composite envelopes.

namespace relfn {

/// Explicit marker for impossible events in exponent arithmetic.
constexpr double minus_infinity() { return -std::numeric_limits<double>::infinity(); }

// A named, sampled (rate -> exponent) curve. Rates strictly increasing,
// exponents finite and nonnegative.
struct BoundCurve {
  std::string name;
  double channel_param = 0.0;
  std::vector<std::pair<double, double>> samples;
};
void validate_curve(const BoundCurve& c);

// Distance profile of a code family: beta(omega) is the base-2 growth rate of
// the number of codeword pairs at relative distance omega, minus_infinity off
// the support; delta_min is the relative minimum distance.
struct DistanceProfile {
  std::function<double(double)> beta;
  double delta_min = 0.0;
};

/// Profile of a random linear code: beta(omega) = R + h(omega) - 1 where
/// nonnegative, support [gv_distance(R), 1 - gv_distance(R)].
DistanceProfile binomial_profile(double R);

struct BSCLandmarks {
  double p = 0, u = 0, rho = 0, delta1 = 0;
  double r_x = 0, r_crit = 0, r1 = 0;  // bits
  double r0 = 0, r0_star = 0;          // meaningful only when the flag is set
  bool r0_found = false;
  bool r0_star_found = false;
  bool tight_window = false;  // r1 < r0_star, decided by the live term comparison
};

// ---- classical exponents ----

/// Sphere-packing exponent D(gv_distance(R) || p); domain [0, capacity].
double sphere_packing(double R, const ChannelBSC& ch);

/// Random-coding exponent D(rho||p) + r_crit - R (linear in R).
double random_coding_E0(double R, const ChannelBSC& ch);

/// Expurgation exponent -A(gv_distance(R)).
double expurgation_Ex(double R, const ChannelBSC& ch);

// ---- distance-distribution machinery ----

/// Distance-distribution exponent
///   mu(R,alpha,omega) = R - 1 + h(tau) + 2h(alpha) - 2 q(alpha,tau,omega/2)
///                       - omega - (1-omega) h((alpha-omega/2)/(1-omega))
/// with tau pinned by h(tau) = h(alpha) - 1 + R. Requires omega in [0, G(alpha,tau)].
double mu_exponent(double R, double alpha, double omega);

/// Overlap exponent B(omega,lambda): the exponent of the conditional
/// probability of confusing a second neighbour given confusion with a first,
/// both at distance omega, the two neighbours at distance lambda apart.
/// Returns minus_infinity() when the inner maximization window is empty.
double overlap_exponent_B(double omega, double lambda, const ChannelBSC& ch);

/// Low-rate union-bound form -A(delta_bar) - R + 1 - h(delta_bar).
double union_bound_low_rate(double R, const ChannelBSC& ch);

// The two competing optimization terms, evaluated at the delta_bar-minimizing
// alpha. union_term is the mu-branch, overlap_term the B-branch;
// (omega_hat, lambda_hat) is where the overlap term attains its maximum.
struct TermSplit {
  double union_term = 0.0;
  double overlap_term = 0.0;
  double omega_hat = 0.0;
  double lambda_hat = 0.0;
};
TermSplit thm3_term_split(double R, const ChannelBSC& ch);
TermSplit thm6_term_split(double R, const ChannelBSC& ch);

/// Older composite bound (registry name "thm3"):
///   min over alpha of max over (delta, omega) of
///     min{ -A(delta), max(-mu - A(omega), B(omega,delta) - A(omega)) }.
double bound_thm3(double R, const ChannelBSC& ch);

/// Newer composite bound (registry name "thm6"), same structure with the
/// overlap branch charged at A(lambda) instead of A(omega).
double bound_thm6(double R, const ChannelBSC& ch);

/// Distance-profile bound for an explicitly known profile:
///   min over omega in [delta_min, 1] of
///     max( -beta(omega) - A(omega),
///          max over lambda in [delta_min, omega] of B(omega,lambda) - A(lambda) ).
double bound_profile(double R, const DistanceProfile& profile, const ChannelBSC& ch);

/// Smallest rate where the thm3 overlap branch overtakes the union term;
/// nullopt when no crossover exists below R_bar(delta1).
std::optional<double> find_R0(const ChannelBSC& ch);

/// Same crossover for the thm6 form, searched up to capacity.
std::optional<double> find_R0_star(const ChannelBSC& ch);

BSCLandmarks landmarks(const ChannelBSC& ch);

// ---- straight-line construction ----

// Common tangent between a sampled low-rate upper bound and the
// sphere-packing curve: the segment of slope `slope` through `intercept`
// touching the low curve at r_low and sphere packing at r_high.
struct TangentLine {
  double slope = 0.0;
  double intercept = 0.0;
  double r_low = 0.0;
  double r_high = 0.0;
  bool degenerate = false;  // curves coincide; segment collapses
};
TangentLine straight_line_tangent(const BoundCurve& low, const ChannelBSC& ch);

/// Combined envelope: low curve up to r_low, the tangent segment on
/// [r_low, r_high], sphere packing beyond.
BoundCurve straight_line(const BoundCurve& low, const ChannelBSC& ch);

// ---- composite envelopes ----

/// Best known lower bound: expurgation on [0, r_x], random coding on
/// [r_x, r_crit], sphere packing above (where the upper bound is tight).
double lower_envelope(double R, const ChannelBSC& ch);

// Upper envelope min(sphere packing, thm6, straight line). The straight line
// hangs off the union curve on its validity range [0, r0_star], so the
// context (landmarks + tangent) is computed once and evaluated pointwise.
class Envelopes {
 public:
  explicit Envelopes(const ChannelBSC& ch);
  Envelopes(const ChannelBSC& ch, const BSCLandmarks& lm);
  double upper(double R) const;
  double lower(double R) const;
  const BSCLandmarks& marks() const { return lm_; }
  const TangentLine& tangent() const { return tangent_; }

 private:
  void build();
  ChannelBSC ch_;
  BSCLandmarks lm_;
  TangentLine tangent_;
};

}  // namespace relfn
