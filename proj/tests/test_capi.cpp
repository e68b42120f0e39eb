#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "relfn.h"

TEST_CASE("C API: version and error reporting") {
  CHECK(std::strlen(relfn_version()) > 0);
  relfn_bsc* ch = nullptr;
  CHECK(relfn_bsc_open(0.7, &ch) == RELFN_ERR_DOMAIN);
  CHECK(ch == nullptr);
  CHECK(std::strlen(relfn_last_error()) > 0);
  CHECK(relfn_bsc_open(0.01, nullptr) == RELFN_ERR_ARG);
}

TEST_CASE("C API: BSC bound evaluation") {
  relfn_bsc* ch = nullptr;
  REQUIRE(relfn_bsc_open(0.01, &ch) == RELFN_OK);
  double v = 0;
  CHECK(relfn_bsc_eval(ch, "ex", 0.0, &v) == RELFN_OK);
  CHECK(v == doctest::Approx(1.1645889398674599).epsilon(1e-10));
  CHECK(relfn_bsc_eval(ch, "e0", 0.537, &v) == RELFN_OK);
  CHECK(std::abs(v - 0.2011) <= 1e-3);
  CHECK(relfn_bsc_eval(ch, "sp", 0.3, &v) == RELFN_OK);
  CHECK(v == doctest::Approx(0.56942).epsilon(1e-4));
  CHECK(relfn_bsc_eval(ch, "union", 0.2, &v) == RELFN_OK);
  CHECK(v == doctest::Approx(0.64897).epsilon(1e-4));
  CHECK(relfn_bsc_eval(ch, "nope", 0.2, &v) == RELFN_ERR_DOMAIN);
  CHECK(relfn_bsc_eval(ch, "sp", 1.5, &v) == RELFN_ERR_DOMAIN);
  // curve errors carry the failing (bound, rate)
  const double rates[] = {0.1, 1.5};
  double out[2];
  CHECK(relfn_bsc_curve(ch, "sp", rates, 2, out) == RELFN_ERR_DOMAIN);
  CHECK(std::string(relfn_last_error()).find("R=1.5") != std::string::npos);
  const char* names = relfn_bsc_bound_names();
  CHECK(std::string(names).find("thm6") != std::string::npos);
  relfn_bsc_close(ch);
}

TEST_CASE("C API: AWGN landmarks and bounds") {
  relfn_awgn* ch = nullptr;
  REQUIRE(relfn_awgn_open(2.0, &ch) == RELFN_OK);
  relfn_awgn_landmarks lm;
  REQUIRE(relfn_awgn_landmarks_compute(ch, &lm) == RELFN_OK);
  CHECK(std::abs(lm.r_x - 0.094) <= 1e-3);
  CHECK(std::abs(lm.r1 - 0.199) <= 1e-3);
  CHECK(std::abs(lm.r_star - 0.263) <= 1e-3);
  CHECK(std::abs(lm.r_crit - 0.267) <= 1e-3);
  CHECK(lm.e0_tight == 1);
  double v = 0;
  CHECK(relfn_awgn_eval(ch, "e0", 0.199, &v) == RELFN_OK);
  CHECK(std::abs(v - 0.1880) <= 1e-3);
  CHECK(relfn_awgn_eval(ch, "eu", 0.199, &v) == RELFN_OK);
  CHECK(std::abs(v - 0.1880) <= 1e-3);
  CHECK(relfn_awgn_eval(ch, "sp", 0.199, &v) == RELFN_ERR_DOMAIN);
  relfn_awgn_close(ch);
  relfn_awgn* bad = nullptr;
  CHECK(relfn_awgn_open(0.0, &bad) == RELFN_ERR_DOMAIN);
}

TEST_CASE("C API: codes and oracles") {
  const char* words[] = {"000", "111"};
  relfn_code* code = nullptr;
  REQUIRE(relfn_code_from_strings(words, 2, &code) == RELFN_OK);
  CHECK(relfn_code_length(code) == 3);
  CHECK(relfn_code_size(code) == 2);
  double pe = 0;
  CHECK(relfn_code_exact_pe(code, 0.1, &pe) == RELFN_OK);
  CHECK(std::abs(pe - 0.028) <= 1e-12);
  double e1 = 0, s1 = 0, e2 = 0, s2 = 0;
  CHECK(relfn_code_mc_pe(code, 0.1, 100000, 9, &e1, &s1) == RELFN_OK);
  CHECK(relfn_code_mc_pe(code, 0.1, 100000, 9, &e2, &s2) == RELFN_OK);
  CHECK(e1 == e2);
  CHECK(std::abs(e1 - 0.028) <= 4.0 * s1);
  relfn_code_close(code);

  relfn_code* missing = nullptr;
  int bad_line = -1;
  CHECK(relfn_code_open("/nonexistent/path/code.txt", &missing, &bad_line) ==
        RELFN_ERR_IO);
  CHECK(missing == nullptr);

  const char* uneven[] = {"0101", "01"};
  CHECK(relfn_code_from_strings(uneven, 2, &missing) == RELFN_ERR_IO);

  double fin = 0, asym = 0, joint = 0, cond = 0;
  CHECK(relfn_oracle_pairwise(400, 0.2, 0.1, &fin, &asym) == RELFN_OK);
  CHECK(std::abs(fin - asym) <= 0.02);
  CHECK(relfn_oracle_joint(600, 0.2, 0.2, 0.1, &joint, &cond, &asym) == RELFN_OK);
  CHECK(std::abs(cond - asym) <= 0.03);
  CHECK(joint < cond);
  CHECK(relfn_oracle_krawtchouk(400, 0.11, 0.15, &fin, &asym) == RELFN_OK);
  CHECK(std::abs(fin - asym) <= 0.02);
  CHECK(relfn_oracle_krawtchouk(400, 0.11, 0.45, &fin, &asym) == RELFN_ERR_DOMAIN);
  CHECK(std::string(relfn_mc_algorithm()).find("splitmix64") != std::string::npos);
}
