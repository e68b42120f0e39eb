#include <cmath>

#include "doctest.h"
#include "relfn/entropy.hpp"
#include "relfn/lp_region.hpp"

using namespace relfn;

TEST_CASE("G: closed forms") {
  for (double tau : {0.0, 0.05, 0.2, 0.4})
    CHECK(G(0.5, tau) ==
          doctest::Approx(0.5 - std::sqrt(tau * (1.0 - tau))).epsilon(1e-12));
  CHECK(G(0.5, 0.0) == doctest::Approx(0.5));
  for (double a : {0.1, 0.3, 0.5}) CHECK(G(a, a) == doctest::Approx(0.0));
  CHECK_THROWS_AS(G(0.3, 0.4), domain_error);
  CHECK_THROWS_AS(G(0.6, 0.1), domain_error);
}

TEST_CASE("tau_nu: closed forms and golden value") {
  for (double xi : {0.05, 0.1, 0.2})
    CHECK(tau_nu(xi, xi) ==
          doctest::Approx(0.5 * (1.0 - std::sqrt(1.0 - 4.0 * xi * xi))).epsilon(1e-12));
  CHECK(tau_nu(0.5, 0.0) == doctest::Approx(0.5));
  CHECK(tau_nu(0.3, 0.083) == doctest::Approx(0.087734546547274693).epsilon(1e-12));
  CHECK_THROWS_AS(tau_nu(0.1, 0.45), domain_error);
}

TEST_CASE("tau_nu inverts G in the tau slot") {
  // G(nu, tau_nu(delta/2)) = delta
  for (double nu : {0.3, 0.4, 0.5})
    for (double delta : {0.05, 0.15, 0.25}) {
      if (nu * (1.0 - nu) < (delta / 2.0) * (1.0 - delta / 2.0)) continue;
      const double tau = tau_nu(nu, delta / 2.0);
      if (tau > nu) continue;
      CHECK(G(nu, tau) == doctest::Approx(delta).epsilon(1e-10));
    }
}

TEST_CASE("delta_bar: structure and landmarks") {
  const auto near_zero = delta_bar(1e-4);
  CHECK(near_zero.delta_bar > 0.47);  // tends to 1/2 as R -> 0
  CHECK(near_zero.argmin_alpha == doctest::Approx(0.5).epsilon(1e-6));

  // boundary minimizer alpha = 1/2 in the low-rate regime
  CHECK(delta_bar(0.303).argmin_alpha == doctest::Approx(0.5).epsilon(1e-4));
  // interior minimizer at higher rates
  CHECK(delta_bar(0.42).argmin_alpha < 0.3);

  // inverse consistency with R_bar at delta1(p = 0.01)
  const ChannelBSC ch(0.01);
  const auto lp = delta_bar(0.537);
  CHECK(std::abs(lp.delta_bar - ch.delta1) <= 2e-3);

  // the reported tau satisfies the equality constraint
  for (double R : {0.1, 0.303, 0.42, 0.6}) {
    const auto r = delta_bar(R);
    CHECK(std::abs(h(r.tau_of_alpha) - (h(r.argmin_alpha) - 1.0 + R)) <= 1e-9);
  }
  CHECK_THROWS_AS(delta_bar(0.0), domain_error);
  CHECK_THROWS_AS(delta_bar(1.0), domain_error);
}

TEST_CASE("delta_bar strictly decreasing in R") {
  double prev = 0.51;
  for (double R : {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75}) {
    const double d = delta_bar(R).delta_bar;
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("R_bar: landmarks and limits") {
  const ChannelBSC ch(0.01);
  CHECK(std::abs(R_bar(ch.delta1) - 0.537) <= 2e-3);
  CHECK(R_bar(0.5) <= 1e-6);  // Plotkin point
  CHECK_THROWS_AS(R_bar(0.0), domain_error);
  CHECK_THROWS_AS(R_bar(0.6), domain_error);
}

TEST_CASE("delta_bar and R_bar are mutual inverses") {
  for (double d : {0.1, 0.166, 0.25}) {
    const double R = R_bar(d);
    CHECK(std::abs(delta_bar(R).delta_bar - d) <= 1e-3);
  }
}
