#include "relfn.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "relfn/awgn.hpp"
#include "relfn/bsc.hpp"
#include "relfn/entropy.hpp"
#include "relfn/lp_region.hpp"
#include "relfn/oracle.hpp"
#include "relfn/poly_exponents.hpp"

namespace {

thread_local std::string g_last_error;

relfn_status fail(relfn_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class F>
relfn_status guarded(F&& f) {
  try {
    return f();
  } catch (const relfn::domain_error& e) {
    return fail(RELFN_ERR_DOMAIN, e.what());
  } catch (const relfn::numeric_error& e) {
    return fail(RELFN_ERR_NUMERIC, e.what());
  } catch (const relfn::io_error& e) {
    return fail(RELFN_ERR_IO, e.what());
  } catch (const relfn::resource_error& e) {
    return fail(RELFN_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(RELFN_ERR_NUMERIC, e.what());
  }
}

}  // namespace

struct relfn_bsc {
  relfn::ChannelBSC ch;
  std::mutex mu;
  std::optional<relfn::BSCLandmarks> lm;
  std::optional<relfn::Envelopes> env;
  explicit relfn_bsc(double p) : ch(p) {}

  const relfn::BSCLandmarks& get_landmarks() {
    std::lock_guard<std::mutex> lock(mu);
    if (!lm) lm = relfn::landmarks(ch);
    return *lm;
  }
  const relfn::Envelopes& get_envelopes() {
    std::lock_guard<std::mutex> lock(mu);
    if (!lm) lm = relfn::landmarks(ch);
    if (!env) env.emplace(ch, *lm);
    return *env;
  }
};

struct relfn_awgn {
  relfn::ChannelAWGN ch;
  explicit relfn_awgn(double a) : ch(a) {}
};

struct relfn_code {
  relfn::BinaryCode code;
  explicit relfn_code(relfn::BinaryCode c) : code(std::move(c)) {}
};

namespace {

double eval_bsc_bound(relfn_bsc* h, const std::string& bound, double R) {
  const relfn::ChannelBSC& ch = h->ch;
  if (bound == "sp") return relfn::sphere_packing(R, ch);
  if (bound == "e0") return relfn::random_coding_E0(R, ch);
  if (bound == "ex") return relfn::expurgation_Ex(R, ch);
  if (bound == "union") return relfn::union_bound_low_rate(R, ch);
  if (bound == "thm3") return relfn::bound_thm3(R, ch);
  if (bound == "thm6") return relfn::bound_thm6(R, ch);
  if (bound == "straightline") {
    const auto& env = h->get_envelopes();
    const auto& t = env.tangent();
    if (R <= t.r_low) return relfn::union_bound_low_rate(R, ch);
    if (R <= t.r_high) return t.slope * R + t.intercept;
    return relfn::sphere_packing(R, ch);
  }
  if (bound == "upper_env") return h->get_envelopes().upper(R);
  if (bound == "lower_env") return relfn::lower_envelope(R, ch);
  throw relfn::domain_error("unknown BSC bound name: " + bound);
}

int even_scaled(double x, int n) {
  return 2 * (int)std::nearbyint(x * (double)n / 2.0);
}

}  // namespace

extern "C" {

const char* relfn_version(void) { return "0.1.0"; }

const char* relfn_last_error(void) { return g_last_error.c_str(); }

relfn_status relfn_bsc_open(double p, relfn_bsc** out) {
  if (!out) return fail(RELFN_ERR_ARG, "relfn_bsc_open: null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new relfn_bsc(p);
    return RELFN_OK;
  });
}

void relfn_bsc_close(relfn_bsc* ch) { delete ch; }

relfn_status relfn_bsc_landmarks_compute(relfn_bsc* ch, relfn_bsc_landmarks* out) {
  if (!ch || !out) return fail(RELFN_ERR_ARG, "relfn_bsc_landmarks_compute: null pointer");
  return guarded([&] {
    const auto& lm = ch->get_landmarks();
    out->p = lm.p;
    out->u = lm.u;
    out->rho = lm.rho;
    out->delta1 = lm.delta1;
    out->r_x = lm.r_x;
    out->r_crit = lm.r_crit;
    out->r1 = lm.r1;
    out->r0 = lm.r0_found ? lm.r0 : NAN;
    out->r0_star = lm.r0_star_found ? lm.r0_star : NAN;
    out->r0_found = lm.r0_found ? 1 : 0;
    out->r0_star_found = lm.r0_star_found ? 1 : 0;
    out->tight_window = lm.tight_window ? 1 : 0;
    return RELFN_OK;
  });
}

const char* relfn_bsc_bound_names(void) {
  return "sp,e0,ex,union,thm3,thm6,straightline,upper_env,lower_env";
}

relfn_status relfn_bsc_eval(relfn_bsc* ch, const char* bound, double rate, double* out) {
  if (!ch || !bound || !out) return fail(RELFN_ERR_ARG, "relfn_bsc_eval: null pointer");
  return guarded([&] {
    *out = eval_bsc_bound(ch, bound, rate);
    return RELFN_OK;
  });
}

relfn_status relfn_bsc_curve(relfn_bsc* ch, const char* bound, const double* rates,
                             size_t count, double* out) {
  if (!ch || !bound || !rates || !out)
    return fail(RELFN_ERR_ARG, "relfn_bsc_curve: null pointer");
  for (size_t i = 0; i < count; ++i) {
    const relfn_status st = guarded([&] {
      out[i] = eval_bsc_bound(ch, bound, rates[i]);
      return RELFN_OK;
    });
    if (st != RELFN_OK) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (bound %s at R=%.6f)", bound, rates[i]);
      g_last_error += buf;
      return st;
    }
  }
  return RELFN_OK;
}

relfn_status relfn_awgn_open(double a, relfn_awgn** out) {
  if (!out) return fail(RELFN_ERR_ARG, "relfn_awgn_open: null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new relfn_awgn(a);
    return RELFN_OK;
  });
}

void relfn_awgn_close(relfn_awgn* ch) { delete ch; }

relfn_status relfn_awgn_landmarks_compute(relfn_awgn* ch, relfn_awgn_landmarks* out) {
  if (!ch || !out)
    return fail(RELFN_ERR_ARG, "relfn_awgn_landmarks_compute: null pointer");
  return guarded([&] {
    const auto lm = relfn::landmarks_awgn(ch->ch);
    out->a = lm.a;
    out->r_x = lm.r_x;
    out->theta_x = lm.theta_x;
    out->r_crit = lm.r_crit;
    out->r1 = lm.r1;
    out->r_star = lm.r_star_found ? lm.r_star : NAN;
    out->r_star_found = lm.r_star_found ? 1 : 0;
    out->e0_tight = lm.e0_tight ? 1 : 0;
    return RELFN_OK;
  });
}

const char* relfn_awgn_bound_names(void) { return "e0,eu"; }

relfn_status relfn_awgn_eval(relfn_awgn* ch, const char* bound, double rate_nats,
                             double* out) {
  if (!ch || !bound || !out) return fail(RELFN_ERR_ARG, "relfn_awgn_eval: null pointer");
  return guarded([&] {
    const std::string b = bound;
    if (b == "e0")
      *out = relfn::E0_awgn(rate_nats, ch->ch);
    else if (b == "eu")
      *out = relfn::EU_awgn(rate_nats, ch->ch);
    else
      throw relfn::domain_error("unknown AWGN bound name: " + b);
    return RELFN_OK;
  });
}

relfn_status relfn_awgn_curve(relfn_awgn* ch, const char* bound, const double* rates,
                              size_t count, double* out) {
  if (!ch || !bound || !rates || !out)
    return fail(RELFN_ERR_ARG, "relfn_awgn_curve: null pointer");
  for (size_t i = 0; i < count; ++i) {
    const relfn_status st = relfn_awgn_eval(ch, bound, rates[i], &out[i]);
    if (st != RELFN_OK) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (bound %s at R=%.6f)", bound, rates[i]);
      g_last_error += buf;
      return st;
    }
  }
  return RELFN_OK;
}

relfn_status relfn_code_open(const char* path, relfn_code** out, int* bad_line) {
  if (!path || !out) return fail(RELFN_ERR_ARG, "relfn_code_open: null pointer");
  *out = nullptr;
  if (bad_line) *bad_line = 0;
  try {
    *out = new relfn_code(relfn::BinaryCode::from_file(path));
    return RELFN_OK;
  } catch (const relfn::io_error& e) {
    if (bad_line) *bad_line = e.line;
    return fail(RELFN_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RELFN_ERR_IO, e.what());
  }
}

relfn_status relfn_code_from_strings(const char* const* words, size_t count,
                                     relfn_code** out) {
  if (!words || !out) return fail(RELFN_ERR_ARG, "relfn_code_from_strings: null pointer");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> rows(words, words + count);
    *out = new relfn_code(relfn::BinaryCode::from_strings(rows));
    return RELFN_OK;
  });
}

void relfn_code_close(relfn_code* code) { delete code; }

int relfn_code_length(const relfn_code* code) { return code ? code->code.n() : 0; }

size_t relfn_code_size(const relfn_code* code) { return code ? code->code.size() : 0; }

relfn_status relfn_code_exact_pe(const relfn_code* code, double p, double* out) {
  if (!code || !out) return fail(RELFN_ERR_ARG, "relfn_code_exact_pe: null pointer");
  return guarded([&] {
    *out = relfn::exact_pe_ml(code->code, p);
    return RELFN_OK;
  });
}

relfn_status relfn_code_mc_pe(const relfn_code* code, double p, uint64_t trials,
                              uint64_t seed, double* estimate, double* std_error) {
  if (!code || !estimate) return fail(RELFN_ERR_ARG, "relfn_code_mc_pe: null pointer");
  return guarded([&] {
    const auto r = relfn::monte_carlo_pe(code->code, p, trials, seed);
    *estimate = r.estimate;
    if (std_error) *std_error = r.std_error;
    return RELFN_OK;
  });
}

const char* relfn_mc_algorithm(void) { return relfn::mc_algorithm_id(); }

relfn_status relfn_oracle_pairwise(int n, double omega, double p, double* finite_n,
                                   double* asymptote) {
  if (!finite_n) return fail(RELFN_ERR_ARG, "relfn_oracle_pairwise: null pointer");
  return guarded([&] {
    const relfn::ChannelBSC ch(p);
    const int w = even_scaled(omega, n);
    const relfn::PairwiseGeometry g(n, w, 0, p);
    *finite_n = relfn::pairwise_set_logprob(g, p);
    if (asymptote) *asymptote = relfn::pairwise_exponent_A(omega, ch);
    return RELFN_OK;
  });
}

relfn_status relfn_oracle_joint(int n, double omega, double lambda, double p,
                                double* joint, double* conditional, double* asymptote) {
  if (!conditional) return fail(RELFN_ERR_ARG, "relfn_oracle_joint: null pointer");
  return guarded([&] {
    const relfn::ChannelBSC ch(p);
    const int w = even_scaled(omega, n);
    const int l = even_scaled(lambda, n);
    const relfn::PairwiseGeometry g(n, w, l, p);
    const double jv = relfn::joint_set_logprob(g, p);
    const double pv = relfn::pairwise_set_logprob(g, p);
    if (joint) *joint = jv;
    *conditional = jv - pv;
    if (asymptote) *asymptote = relfn::overlap_exponent_B(omega, lambda, ch);
    return RELFN_OK;
  });
}

relfn_status relfn_oracle_krawtchouk(int n, double tau, double omega, double* finite_n,
                                     double* asymptote) {
  if (!finite_n) return fail(RELFN_ERR_ARG, "relfn_oracle_krawtchouk: null pointer");
  return guarded([&] {
    const int k = (int)std::nearbyint(tau * (double)n);
    const int x = (int)std::nearbyint(omega * (double)n);
    const auto v = relfn::krawtchouk_value(n, k, x);
    if (v.sign == 0)
      throw relfn::numeric_error("relfn_oracle_krawtchouk: exact zero value");
    *finite_n = v.log2abs / (double)n;
    if (asymptote) *asymptote = relfn::krawtchouk_exponent_k(tau, omega);
    return RELFN_OK;
  });
}

}  // extern "C"
