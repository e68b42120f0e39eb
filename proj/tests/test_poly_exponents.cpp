#include <cmath>

#include "doctest.h"
#include "relfn/entropy.hpp"
#include "relfn/oracle.hpp"
#include "relfn/poly_exponents.hpp"

using namespace relfn;

TEST_CASE("Krawtchouk exponent: endpoints and golden values") {
  for (double tau : {0.05, 0.11, 0.3})
    CHECK(krawtchouk_exponent_k(tau, 0.0) == doctest::Approx(h(tau)).epsilon(1e-14));
  // degree-0 polynomial is identically 1
  CHECK(krawtchouk_exponent_k(0.0, 0.3) == doctest::Approx(0.0).epsilon(1e-9));
  // high-precision quadrature goldens
  CHECK(krawtchouk_exponent_k(0.11, 0.15) ==
        doctest::Approx(0.43035805953900867).epsilon(1e-8));
  CHECK(krawtchouk_exponent_k(0.05, 0.2) ==
        doctest::Approx(0.24569415276995432).epsilon(1e-8));
  CHECK(krawtchouk_exponent_k(0.15, 0.1) ==
        doctest::Approx(0.54815112677052164).epsilon(1e-8));
  CHECK_THROWS_AS(krawtchouk_exponent_k(0.11, 0.3), domain_error);  // past the edge
  CHECK_THROWS_AS(krawtchouk_exponent_k(0.6, 0.1), domain_error);
}

TEST_CASE("Krawtchouk exponent: nonincreasing in omega") {
  for (double tau : {0.05, 0.11, 0.2}) {
    const double edge = 0.5 - std::sqrt(tau * (1.0 - tau));
    double prev = krawtchouk_exponent_k(tau, 0.0);
    for (int i = 1; i <= 8; ++i) {
      const double v = krawtchouk_exponent_k(tau, edge * i / 8.0);
      CHECK(v <= prev + 1e-10);
      prev = v;
    }
  }
}

TEST_CASE("Krawtchouk exponent: edge value identity") {
  // at the region edge, k(tau, .) meets (1 + h(tau) - h(edge))/2
  for (double tau : {0.05, 0.11, 0.2}) {
    const double edge = 0.5 - std::sqrt(tau * (1.0 - tau));
    CHECK(krawtchouk_exponent_k(tau, edge) ==
          doctest::Approx(0.5 * (1.0 + h(tau) - h(edge))).epsilon(1e-7));
  }
}

TEST_CASE("Hahn exponent: endpoints, golden values, validity flagging") {
  CHECK(hahn_exponent_q(0.4, 0.1, 0.0) == doctest::Approx(h(0.1)).epsilon(1e-14));
  CHECK(hahn_exponent_q(0.4, 0.1, 0.09) ==
        doctest::Approx(0.38190065953052319).epsilon(1e-8));
  CHECK(hahn_exponent_q(0.35, 0.2, 0.035) ==
        doctest::Approx(0.64638501391198041).epsilon(1e-8));
  // the integrand leaves its validity region at y = G(alpha,tau)/2
  CHECK_THROWS_AS(hahn_exponent_q(0.35, 0.2, 0.05), numeric_error);
  // the discriminant goes negative beyond y ~ 0.0937 for (0.4, 0.1)
  CHECK_THROWS_AS(hahn_exponent_q(0.4, 0.1, 0.12), numeric_error);
  CHECK_THROWS_AS(hahn_exponent_q(0.4, 0.1, 0.5), domain_error);  // omega > alpha
  CHECK_THROWS_AS(hahn_exponent_q(0.4, 0.45, 0.05), domain_error);  // tau > alpha
}

TEST_CASE("Hahn exponent reduces to Krawtchouk at alpha = 1/2") {
  const double pts[][2] = {{0.05, 0.25}, {0.11, 0.15}, {0.2, 0.08}, {0.3, 0.04}};
  for (const auto& [tau, om] : pts)
    CHECK(hahn_exponent_q(0.5, tau, om / 2.0) ==
          doctest::Approx(krawtchouk_exponent_k(tau, om)).epsilon(1e-6));
}

TEST_CASE("LPPoint feasibility") {
  CHECK_NOTHROW(LPPoint(0.5, h_inv(0.3), 0.3));
  CHECK_NOTHROW(LPPoint(0.4, 0.1, 0.6));
  CHECK_THROWS_AS(LPPoint(0.4, 0.1, 0.2), domain_error);   // h(tau) too large for R
  CHECK_THROWS_AS(LPPoint(0.3, 0.35, 0.9), domain_error);  // tau > alpha
  CHECK_THROWS_AS(LPPoint(0.7, 0.1, 0.5), domain_error);   // alpha > 1/2
}

TEST_CASE("finite-length Krawtchouk values approach the exponent") {
  // |k(tau,omega) - (1/n) log2 K_{tau n}(omega n)| <= 4 log2(n)/n
  const double tau = 0.11, om = 0.15;
  const double kk = krawtchouk_exponent_k(tau, om);
  for (int n : {100, 200, 400}) {
    const auto v = krawtchouk_value(n, (int)std::lround(tau * n), (int)std::lround(om * n));
    REQUIRE(v.sign == 1);
    CHECK(std::abs(v.log2abs / n - kk) <= 4.0 * std::log2((double)n) / n);
  }
}
