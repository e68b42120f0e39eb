#include "relfn/bsc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "relfn/lp_region.hpp"
#include "relfn/numerics.hpp"
#include "relfn/poly_exponents.hpp"

namespace relfn {

namespace {

constexpr double kTiny = 1e-9;

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

double tau_at_equality(double alpha, double R) {
  return h_inv(std::max(h(alpha) - 1.0 + R, 0.0));
}

}  // namespace

void validate_curve(const BoundCurve& c) {
  if (c.samples.empty()) throw domain_error("BoundCurve: no samples");
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& [r, e] : c.samples) {
    if (!(r > prev)) throw domain_error("BoundCurve: rates not strictly increasing");
    if (!std::isfinite(e) || e < 0.0)
      throw domain_error("BoundCurve: exponents must be finite and nonnegative");
    prev = r;
  }
}

DistanceProfile binomial_profile(double R) {
  if (!(R > 0.0) || !(R < 1.0)) throw domain_error("binomial_profile: rate outside (0,1)");
  DistanceProfile prof;
  prof.delta_min = gv_distance(R);
  prof.beta = [R](double om) {
    if (om < 0.0 || om > 1.0) return minus_infinity();
    const double v = R + h(om) - 1.0;
    return v >= -1e-12 ? std::max(v, 0.0) : minus_infinity();
  };
  return prof;
}

double sphere_packing(double R, const ChannelBSC& ch) {
  if (R < 0.0 || R > ch.capacity() + 1e-12)
    throw domain_error("sphere_packing: rate above capacity");
  return divergence(gv_distance(std::min(R, ch.capacity())), ch.p);
}

double random_coding_E0(double R, const ChannelBSC& ch) {
  return divergence(ch.rho, ch.p) + ch.r_crit - R;
}

double expurgation_Ex(double R, const ChannelBSC& ch) {
  return -pairwise_exponent_A(gv_distance(R), ch);
}

double mu_exponent(double R, double alpha, double omega) {
  if (!(R > 0.0) || !(R < 1.0)) throw domain_error("mu_exponent: rate outside (0,1)");
  if (!(alpha > 0.0) || alpha > 0.5)
    throw domain_error("mu_exponent: alpha outside (0, 1/2]");
  if (h(alpha) - 1.0 + R < -1e-9)
    throw domain_error("mu_exponent: no feasible tau, need h(alpha) >= 1 - R");
  const double tau = tau_at_equality(alpha, R);
  const double g = G(alpha, tau);
  if (omega < 0.0 || omega > g + 1e-9)
    throw domain_error("mu_exponent: omega outside [0, G(alpha,tau)]");
  omega = std::min(omega, g);
  const double q = hahn_exponent_q(alpha, tau, omega / 2.0);
  return R - 1.0 + h(tau) + 2.0 * h(alpha) - 2.0 * q - omega -
         (1.0 - omega) * h(clamp01((alpha - omega / 2.0) / (1.0 - omega)));
}

double overlap_exponent_B(double omega, double lambda, const ChannelBSC& ch) {
  const double p = ch.p;
  if (!(omega > 0.0) || omega > 1.0)
    throw domain_error("overlap_exponent_B: omega outside (0,1]");
  if (!(lambda > 0.0) || lambda > 2.0 * omega + 1e-12)
    throw domain_error("overlap_exponent_B: need 0 < lambda <= 2*omega");
  lambda = std::min(lambda, 2.0 * omega);
  const double c2 = omega - lambda / 2.0;
  const double c3 = 1.0 - omega - lambda / 2.0;
  if (c3 <= 0.0) return minus_infinity();
  double lo = lambda * p / 2.0;
  double hi = std::min(lambda / 4.0, p * (1.0 - omega));
  // Candidate eta values whose entropy arguments leave [0,1] are infeasible.
  lo = std::max({lo, (lambda - omega) / 2.0, p * (1.0 - omega) - c3});
  if (lo > hi + 1e-13) return minus_infinity();
  hi = std::max(hi, lo);
  const double denom2 = 2.0 * omega - lambda;
  auto f = [&](double eta) {
    const double a1 = clamp01(2.0 * eta / lambda);
    const double a2 = denom2 > 0.0 ? clamp01((omega - 2.0 * eta) / denom2) : 0.5;
    const double a3 = clamp01((p * (1.0 - omega) - eta) / c3);
    return lambda * h(a1) + c2 * h(a2) + c3 * h(a3);
  };
  double m;
  if (hi - lo < 1e-13)
    m = f(0.5 * (lo + hi));
  else
    m = maximize_1d(f, Interval(lo, hi), 16, 1e-11).value;
  return -omega - (1.0 - omega) * h(p) + m;
}

double union_bound_low_rate(double R, const ChannelBSC& ch) {
  const auto lp = delta_bar(R);
  return -pairwise_exponent_A(lp.delta_bar, ch) - R + 1.0 - h(lp.delta_bar);
}

namespace {

// max over omega in [0, g] of (-mu(R,alpha,omega) - A(omega))
OptimResult mu_term_max(double R, double alpha, double g, const ChannelBSC& ch,
                        int grid = 64) {
  if (g <= 0.0) {
    OptimResult r;
    r.arg = 0.0;
    r.value = -mu_exponent(R, alpha, 0.0);
    r.evaluations = 1;
    return r;
  }
  return maximize_1d(
      [&](double w) { return -mu_exponent(R, alpha, w) - pairwise_exponent_A(w, ch); },
      Interval(0.0, g), grid, 1e-7);
}

struct TriMax {
  double value = minus_infinity();
  double omega = 0.0;
  double lambda = 0.0;
};

// max of f(omega, lambda) over the triangle lo <= lambda <= omega <= g:
// coarse scan plus two rounds of coordinate golden refinement.
template <class F>
TriMax max_over_triangle(F&& f, double lo, double g, int grid) {
  TriMax best;
  if (g <= lo) return best;
  auto grid_point = [&](int i) { return i == grid - 1 ? g : lo + (g - lo) * i / (grid - 1); };
  for (int i = 0; i < grid; ++i) {
    const double lam = grid_point(i);
    for (int j = i; j < grid; ++j) {
      const double om = grid_point(j);
      const double v = f(om, lam);
      if (v > best.value) best = {v, om, lam};
    }
  }
  if (best.value == minus_infinity()) return best;
  const double cell = (g - lo) / (grid - 1);
  double om = best.omega, lam = best.lambda;
  for (int round = 0; round < 2; ++round) {
    const double whi = std::min(g, om + cell);
    const double wlo = std::min(std::max(lam, om - cell), whi);
    const auto rw = maximize_1d([&](double w) { return f(w, lam); }, Interval(wlo, whi),
                                16, 1e-9);
    om = rw.arg;
    if (rw.value > best.value) best = {rw.value, om, lam};
    const double lhi = std::min(om, lam + cell);
    const double llo = std::min(std::max(lo, lam - cell), lhi);
    const auto rl = maximize_1d([&](double l) { return f(om, l); }, Interval(llo, lhi),
                                16, 1e-9);
    lam = rl.arg;
    if (rl.value > best.value) best = {rl.value, om, lam};
  }
  return best;
}

// Overlap branch of the thm3 optimization on [0, db]:
//   max over delta of min(-A(delta), M(delta)),
//   M(delta) = max over omega in [delta, g] of B(omega,delta) - A(omega).
// The cap -A(delta) increases while M decreases, so the maximum sits at
// their crossing; a coarse scan guards the endpoint cases.
TriMax capped_overlap_max(double g, double db, const ChannelBSC& ch) {
  auto M = [&](double d) {
    return maximize_1d(
               [&](double w) {
                 return overlap_exponent_B(w, d, ch) - pairwise_exponent_A(w, ch);
               },
               Interval(d, g), 24, 1e-9)
        .value;
  };
  auto capped = [&](double d) { return std::min(-pairwise_exponent_A(d, ch), M(d)); };
  TriMax best;
  for (int i = 1; i <= 17; ++i) {
    const double d = i == 17 ? db : db * i / 17.0;
    const double v = capped(d);
    if (v > best.value) best = {v, 0.0, d};
  }
  auto diff = [&](double d) { return M(d) + pairwise_exponent_A(d, ch); };
  const double dlo = std::min(kTiny, db / 2.0);
  if (diff(dlo) > 0.0 && diff(db) < 0.0) {
    const double d = find_root(diff, Interval(dlo, db), 1e-8);
    const double v = capped(d);
    if (v > best.value) best = {v, 0.0, d};
  }
  const auto rw = maximize_1d(
      [&](double w) {
        return overlap_exponent_B(w, best.lambda, ch) - pairwise_exponent_A(w, ch);
      },
      Interval(best.lambda, g), 24, 1e-10);
  best.omega = rw.arg;
  return best;
}

}  // namespace

TermSplit thm3_term_split(double R, const ChannelBSC& ch) {
  const auto lp = delta_bar(R);
  TermSplit ts;
  ts.union_term =
      mu_term_max(R, lp.argmin_alpha, G(lp.argmin_alpha, lp.tau_of_alpha), ch).value;
  const auto tri = capped_overlap_max(lp.delta_bar, lp.delta_bar, ch);
  ts.overlap_term = tri.value;
  ts.omega_hat = tri.omega;
  ts.lambda_hat = tri.lambda;
  return ts;
}

TermSplit thm6_term_split(double R, const ChannelBSC& ch) {
  const auto lp = delta_bar(R);
  TermSplit ts;
  ts.union_term =
      mu_term_max(R, lp.argmin_alpha, G(lp.argmin_alpha, lp.tau_of_alpha), ch).value;
  const auto tri = max_over_triangle(
      [&](double om, double lam) {
        return overlap_exponent_B(om, lam, ch) - pairwise_exponent_A(lam, ch);
      },
      kTiny, lp.delta_bar, 48);
  ts.overlap_term = tri.value;
  ts.omega_hat = tri.omega;
  ts.lambda_hat = tri.lambda;
  return ts;
}

double bound_thm3(double R, const ChannelBSC& ch) {
  if (!(R > 0.0) || !(R < ch.capacity()))
    throw domain_error("bound_thm3: rate outside (0, capacity)");
  const auto lp = delta_bar(R);
  const double db = lp.delta_bar;
  auto value_at_alpha = [&](double alpha) -> double {
    const double tau = tau_at_equality(alpha, R);
    const double g = G(alpha, tau);
    if (g <= 0.0) return -mu_exponent(R, alpha, 0.0);
    // mu branch on a fixed grid; suffix maxima give max over [delta, g]
    const int nw = 97;
    std::vector<double> suffix(nw);
    {
      std::vector<double> mv(nw);
      for (int i = 0; i < nw; ++i) {
        const double w = g * i / (nw - 1);
        mv[i] = -mu_exponent(R, alpha, w) - pairwise_exponent_A(w, ch);
      }
      double run = minus_infinity();
      for (int i = nw - 1; i >= 0; --i) {
        run = std::max(run, mv[i]);
        suffix[i] = run;
      }
    }
    auto mu_max_from = [&](double d) {
      int i = (int)std::ceil(d / g * (nw - 1) - 1e-12);
      i = std::max(0, std::min(nw - 1, i));
      return suffix[i];
    };
    auto inner = [&](double d) -> double {
      const double capv = -pairwise_exponent_A(d, ch);
      const double mb =
          maximize_1d(
              [&](double w) {
                return overlap_exponent_B(w, d, ch) - pairwise_exponent_A(w, ch);
              },
              Interval(d, g), 24, 1e-9)
              .value;
      return std::min(capv, std::max(mu_max_from(d), mb));
    };
    return maximize_1d(inner, Interval(kTiny, db), 33, 1e-6).value;
  };
  const double alo = std::min(gv_distance(R) + kTiny, 0.5);
  const auto r = minimize_1d(value_at_alpha, Interval(alo, 0.5), 17, 1e-4);
  return std::min(r.value, value_at_alpha(lp.argmin_alpha));
}

double bound_thm6(double R, const ChannelBSC& ch) {
  if (!(R > 0.0) || !(R < ch.capacity()))
    throw domain_error("bound_thm6: rate outside (0, capacity)");
  const auto lp = delta_bar(R);
  auto value_at_alpha = [&](double alpha) -> double {
    const double tau = tau_at_equality(alpha, R);
    const double g = G(alpha, tau);
    const double t1 = mu_term_max(R, alpha, g, ch).value;
    const auto tri = max_over_triangle(
        [&](double om, double lam) {
          return overlap_exponent_B(om, lam, ch) - pairwise_exponent_A(lam, ch);
        },
        kTiny, g, 40);
    return std::max(t1, tri.value);
  };
  const double alo = std::min(gv_distance(R) + kTiny, 0.5);
  const auto r = minimize_1d(value_at_alpha, Interval(alo, 0.5), 17, 1e-4);
  return std::min(r.value, value_at_alpha(lp.argmin_alpha));
}

double bound_profile(double R, const DistanceProfile& profile, const ChannelBSC& ch) {
  if (!(R > 0.0) || !(R < 1.0)) throw domain_error("bound_profile: rate outside (0,1)");
  const double d = profile.delta_min;
  if (d < 0.0 || d >= 1.0) throw domain_error("bound_profile: delta_min outside [0,1)");
  const double wlo = std::max(d, kTiny);
  auto value = [&](double om) -> double {
    const double b = profile.beta(om);
    if (b == minus_infinity()) return std::numeric_limits<double>::infinity();
    double v = -b - pairwise_exponent_A(om, ch);
    const double t2 =
        maximize_1d(
            [&](double lam) {
              return overlap_exponent_B(om, lam, ch) - pairwise_exponent_A(lam, ch);
            },
            Interval(wlo, om), 24, 1e-8)
            .value;
    return std::max(v, t2);
  };
  const auto r = minimize_1d(value, Interval(wlo, 1.0), 160, 1e-6);
  if (!std::isfinite(r.value))
    throw domain_error("bound_profile: profile support is empty");
  return r.value;
}

namespace {

// First sign change of f (negative to nonnegative) on a step grid, refined by
// bisection; nullopt when f stays negative on (0, rmax).
template <class F>
std::optional<double> first_crossing(F&& f, double step, double rmax) {
  double prev_r = 0.0, prev_v = 0.0;
  bool have = false;
  for (double R = step; R < rmax; R += step) {
    const double v = f(R);
    if (v >= 0.0) {
      if (!have) return R;  // already crossed at the grid floor
      return find_root(f, Interval(prev_r, R), 1e-5);
    }
    have = true;
    prev_r = R;
    prev_v = v;
  }
  (void)prev_v;
  return std::nullopt;
}

}  // namespace

std::optional<double> find_R0(const ChannelBSC& ch) {
  const double rmax = R_bar(ch.delta1);
  return first_crossing(
      [&](double R) {
        const auto ts = thm3_term_split(R, ch);
        return ts.overlap_term - ts.union_term;
      },
      1e-3, rmax);
}

std::optional<double> find_R0_star(const ChannelBSC& ch) {
  return first_crossing(
      [&](double R) {
        const auto ts = thm6_term_split(R, ch);
        return ts.overlap_term - ts.union_term;
      },
      1e-3, ch.capacity() - 1e-3);
}

BSCLandmarks landmarks(const ChannelBSC& ch) {
  BSCLandmarks lm;
  lm.p = ch.p;
  lm.u = ch.u;
  lm.rho = ch.rho;
  lm.delta1 = ch.delta1;
  lm.r_x = ch.r_x;
  lm.r_crit = ch.r_crit;
  lm.r1 = R_bar(ch.delta1);
  if (const auto r0 = find_R0(ch)) {
    lm.r0 = *r0;
    lm.r0_found = true;
  }
  if (const auto r0s = find_R0_star(ch)) {
    lm.r0_star = *r0s;
    lm.r0_star_found = true;
  }
  const auto ts = thm6_term_split(lm.r1, ch);
  lm.tight_window = ts.overlap_term <= ts.union_term;
  return lm;
}

namespace {

// Support line of slope m from below: min over the curve of (E - m R).
std::pair<double, double> support_sampled(const BoundCurve& c, double m) {
  double best = std::numeric_limits<double>::infinity();
  double arg = c.samples.front().first;
  for (const auto& [r, e] : c.samples) {
    const double v = e - m * r;
    if (v < best) {
      best = v;
      arg = r;
    }
  }
  return {best, arg};
}

std::pair<double, double> support_sp(const ChannelBSC& ch, double m) {
  const double cap = ch.capacity();
  const auto r = minimize_1d(
      [&](double R) { return sphere_packing(R, ch) - m * R; },
      Interval(1e-9, cap - 1e-9), 256, 1e-10);
  return {r.value, r.arg};
}

}  // namespace

TangentLine straight_line_tangent(const BoundCurve& low, const ChannelBSC& ch) {
  validate_curve(low);
  const double cap = ch.capacity();
  if (low.samples.back().first >= cap)
    throw domain_error("straight_line_tangent: low curve extends to capacity");
  auto gap = [&](double m) {
    return support_sampled(low, m).first - support_sp(ch, m).first;
  };
  // Sampling can only raise the low curve's support line, so two coinciding
  // curves give a gap that hovers at +O(step^2) instead of crossing zero.
  const double gtol = 1e-5;
  double mlo = -1.0, mhi = -1e-7;
  while (gap(mlo) > gtol && mlo > -1e6) mlo *= 2.0;
  double m;
  bool contact = false;
  const double glo = gap(mlo), ghi = gap(mhi);
  if (glo < 0.0 && ghi >= 0.0) {
    m = find_root(gap, Interval(mlo, mhi), 1e-10);
  } else if (std::abs(glo) <= gtol || std::abs(ghi) <= gtol) {
    m = std::abs(glo) <= std::abs(ghi) ? mlo : mhi;  // curves already touch
    contact = true;
  } else {
    throw numeric_error("straight_line_tangent: tangent slope not bracketed");
  }
  TangentLine t;
  t.slope = m;
  t.degenerate = contact;
  const auto s1 = support_sampled(low, m);
  const auto s2 = support_sp(ch, m);
  t.intercept = std::max(s1.first, s2.first);
  t.r_low = std::min(s1.second, s2.second);
  t.r_high = std::max(s1.second, s2.second);
  t.degenerate = t.degenerate || std::abs(t.r_high - t.r_low) < 1e-6;
  return t;
}

BoundCurve straight_line(const BoundCurve& low, const ChannelBSC& ch) {
  const TangentLine t = straight_line_tangent(low, ch);
  BoundCurve out;
  out.name = low.name + "+straightline";
  out.channel_param = low.channel_param;
  double step = 1e-3;
  if (low.samples.size() >= 2)
    step = (low.samples.back().first - low.samples.front().first) /
           (double)(low.samples.size() - 1);
  for (const auto& s : low.samples)
    if (s.first < t.r_low) out.samples.push_back(s);
  for (double R = t.r_low; R < t.r_high; R += step)
    out.samples.push_back({R, t.slope * R + t.intercept});
  const double cap = ch.capacity();
  for (double R = t.r_high; R < cap; R += step)
    out.samples.push_back({R, sphere_packing(R, ch)});
  validate_curve(out);
  return out;
}

double lower_envelope(double R, const ChannelBSC& ch) {
  if (R < 0.0 || R >= ch.capacity())
    throw domain_error("lower_envelope: rate outside [0, capacity)");
  if (R <= ch.r_x) return expurgation_Ex(R, ch);
  if (R <= ch.r_crit) return random_coding_E0(R, ch);
  return sphere_packing(R, ch);
}

Envelopes::Envelopes(const ChannelBSC& ch) : ch_(ch), lm_(landmarks(ch)) { build(); }

Envelopes::Envelopes(const ChannelBSC& ch, const BSCLandmarks& lm) : ch_(ch), lm_(lm) {
  build();
}

void Envelopes::build() {
  const double cap = ch_.capacity();
  const double rend = lm_.r0_star_found ? lm_.r0_star : cap - 1e-3;
  BoundCurve low;
  low.name = "union";
  low.channel_param = ch_.p;
  const int n = 400;
  low.samples.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const double R = rend * i / n;
    low.samples.push_back({R, union_bound_low_rate(R, ch_)});
  }
  tangent_ = straight_line_tangent(low, ch_);
}

double Envelopes::upper(double R) const {
  if (!(R > 0.0) || !(R < ch_.capacity()))
    throw domain_error("upper_envelope: rate outside (0, capacity)");
  double sl;
  if (R <= tangent_.r_low)
    sl = union_bound_low_rate(R, ch_);
  else if (R <= tangent_.r_high)
    sl = tangent_.slope * R + tangent_.intercept;
  else
    sl = sphere_packing(R, ch_);
  return std::min({sphere_packing(R, ch_), bound_thm6(R, ch_), sl});
}

double Envelopes::lower(double R) const { return lower_envelope(R, ch_); }

}  // namespace relfn
