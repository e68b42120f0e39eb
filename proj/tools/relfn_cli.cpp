// Command-line front end for the relfn shared library: landmark reports,
// bound-curve tabulation to CSV, and finite-length oracle experiments.
// Exit codes: 0 success, 2 argument/domain error, 3 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relfn.h"

namespace {

int exit_code(relfn_status st) {
  switch (st) {
    case RELFN_OK:
      return 0;
    case RELFN_ERR_NUMERIC:
      return 3;
    default:
      return 2;
  }
}

int report_failure(relfn_status st) {
  std::fprintf(stderr, "error: %s\n", relfn_last_error());
  return exit_code(st);
}

struct RateGrid {
  std::vector<double> rates;
};

// "start:stop:step" with step > 0 and start < stop
bool parse_rates(const std::string& spec, RateGrid& out) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3) return false;
  if (!(step > 0.0) || !(start < stop)) return false;
  for (double r = start; r <= stop + step * 1e-9; r += step) out.rates.push_back(r);
  return !out.rates.empty();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Reorder user bounds into registry order; empty or unknown names fail.
bool normalize_bounds(const std::string& registry, const std::string& user,
                      std::vector<std::string>& out) {
  const auto reg = split_csv(registry);
  const auto req = split_csv(user);
  if (req.empty()) return false;
  for (const auto& b : req)
    if (std::find(reg.begin(), reg.end(), b) == reg.end()) return false;
  for (const auto& b : reg)
    if (std::find(req.begin(), req.end(), b) != req.end()) out.push_back(b);
  return true;
}

int write_curves_csv(const char* path, const std::vector<double>& rates,
                     const std::vector<std::string>& bounds,
                     const std::vector<std::vector<double>>& values) {
  std::FILE* f = path ? std::fopen(path, "w") : stdout;
  if (!f) {
    std::fprintf(stderr, "error: cannot open output file %s\n", path);
    return 2;
  }
  std::fprintf(f, "R,bound,value\n");
  for (size_t i = 0; i < rates.size(); ++i)
    for (size_t b = 0; b < bounds.size(); ++b)
      std::fprintf(f, "%.9f,%s,%.9f\n", rates[i], bounds[b].c_str(), values[b][i]);
  if (path) std::fclose(f);
  return 0;
}

int cmd_bsc_landmarks(double p, const std::string& csv_path) {
  relfn_bsc* ch = nullptr;
  relfn_status st = relfn_bsc_open(p, &ch);
  if (st != RELFN_OK) return report_failure(st);
  relfn_bsc_landmarks lm;
  st = relfn_bsc_landmarks_compute(ch, &lm);
  if (st != RELFN_OK) {
    relfn_bsc_close(ch);
    return report_failure(st);
  }
  std::printf("BSC landmarks (p = %.6f), rates in bits per symbol\n", lm.p);
  std::printf("  u        = %.9f        (closed form)\n", lm.u);
  std::printf("  rho      = %.9f        (closed form)\n", lm.rho);
  std::printf("  delta1   = %.9f        (closed form)\n", lm.delta1);
  std::printf("  r_x      = %.9f bits   (closed form)\n", lm.r_x);
  std::printf("  r_crit   = %.9f bits   (closed form)\n", lm.r_crit);
  std::printf("  r1       = %.9f bits   (optimizer tol 1e-9)\n", lm.r1);
  if (lm.r0_found)
    std::printf("  r0       = %.9f bits   (scan step 1e-3, bisection 1e-5)\n", lm.r0);
  else
    std::printf("  r0       = not found below r1 (scan step 1e-3)\n");
  if (lm.r0_star_found)
    std::printf("  r0_star  = %.9f bits   (scan step 1e-3, bisection 1e-5)\n",
                lm.r0_star);
  else
    std::printf("  r0_star  = not found below capacity (scan step 1e-3)\n");
  std::printf("  tight window [r1, r_crit] = [%.6f, %.6f] bits: %s (needs r1 < r0_star)\n",
              lm.r1, lm.r_crit, lm.tight_window ? "applicable" : "not applicable");
  if (!csv_path.empty()) {
    std::FILE* f = std::fopen(csv_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "error: cannot open output file %s\n", csv_path.c_str());
      relfn_bsc_close(ch);
      return 2;
    }
    std::fprintf(f, "name,value,unit\n");
    std::fprintf(f, "u,%.9f,-\n", lm.u);
    std::fprintf(f, "rho,%.9f,-\n", lm.rho);
    std::fprintf(f, "delta1,%.9f,-\n", lm.delta1);
    std::fprintf(f, "r_x,%.9f,bits\n", lm.r_x);
    std::fprintf(f, "r_crit,%.9f,bits\n", lm.r_crit);
    std::fprintf(f, "r1,%.9f,bits\n", lm.r1);
    if (lm.r0_found) std::fprintf(f, "r0,%.9f,bits\n", lm.r0);
    if (lm.r0_star_found) std::fprintf(f, "r0_star,%.9f,bits\n", lm.r0_star);
    std::fprintf(f, "tight_window,%d,flag\n", lm.tight_window);
    std::fclose(f);
  }
  relfn_bsc_close(ch);
  return 0;
}

int cmd_bsc_curves(double p, const std::string& rates_spec, const std::string& bounds_csv,
                   const std::string& out_path) {
  RateGrid grid;
  if (!parse_rates(rates_spec, grid)) {
    std::fprintf(stderr, "error: --rates must be start:stop:step with step>0, start<stop\n");
    return 2;
  }
  std::vector<std::string> bounds;
  if (!normalize_bounds(relfn_bsc_bound_names(), bounds_csv, bounds)) {
    std::fprintf(stderr, "error: --bounds must be a nonempty subset of {%s}\n",
                 relfn_bsc_bound_names());
    return 2;
  }
  relfn_bsc* ch = nullptr;
  relfn_status st = relfn_bsc_open(p, &ch);
  if (st != RELFN_OK) return report_failure(st);
  std::vector<std::vector<double>> values(bounds.size(),
                                          std::vector<double>(grid.rates.size()));
  for (size_t b = 0; b < bounds.size(); ++b) {
    st = relfn_bsc_curve(ch, bounds[b].c_str(), grid.rates.data(), grid.rates.size(),
                         values[b].data());
    if (st != RELFN_OK) {
      relfn_bsc_close(ch);
      return report_failure(st);
    }
  }
  relfn_bsc_close(ch);
  return write_curves_csv(out_path.empty() ? nullptr : out_path.c_str(), grid.rates,
                          bounds, values);
}

int cmd_awgn_landmarks(double a, const std::string& csv_path) {
  relfn_awgn* ch = nullptr;
  relfn_status st = relfn_awgn_open(a, &ch);
  if (st != RELFN_OK) return report_failure(st);
  relfn_awgn_landmarks lm;
  st = relfn_awgn_landmarks_compute(ch, &lm);
  relfn_awgn_close(ch);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("AWGN landmarks (a = %.6f), rates in nats per dimension\n", lm.a);
  std::printf("  r_x      = %.9f nats   (closed form)\n", lm.r_x);
  std::printf("  theta_x  = %.9f rad    (closed form)\n", lm.theta_x);
  std::printf("  r_crit   = %.9f nats   (closed form)\n", lm.r_crit);
  std::printf("  r1       = %.9f nats   (root tol 1e-12)\n", lm.r1);
  if (lm.r_star_found)
    std::printf("  r_star   = %.9f nats   (root tol 1e-12)\n", lm.r_star);
  else
    std::printf("  r_star   = beyond r_crit (no root in (0.001, r_crit])\n");
  std::printf("  tight window [r1, r_crit]: %s (needs r1 <= r_star)\n",
              lm.e0_tight ? "applicable" : "not applicable");
  if (!csv_path.empty()) {
    std::FILE* f = std::fopen(csv_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "error: cannot open output file %s\n", csv_path.c_str());
      return 2;
    }
    std::fprintf(f, "name,value,unit\n");
    std::fprintf(f, "r_x,%.9f,nats\n", lm.r_x);
    std::fprintf(f, "theta_x,%.9f,rad\n", lm.theta_x);
    std::fprintf(f, "r_crit,%.9f,nats\n", lm.r_crit);
    std::fprintf(f, "r1,%.9f,nats\n", lm.r1);
    if (lm.r_star_found) std::fprintf(f, "r_star,%.9f,nats\n", lm.r_star);
    std::fprintf(f, "e0_tight,%d,flag\n", lm.e0_tight);
    std::fclose(f);
  }
  return 0;
}

int cmd_awgn_curves(double a, const std::string& rates_spec, const std::string& bounds_csv,
                    const std::string& out_path) {
  RateGrid grid;
  if (!parse_rates(rates_spec, grid)) {
    std::fprintf(stderr, "error: --rates must be start:stop:step with step>0, start<stop\n");
    return 2;
  }
  std::vector<std::string> bounds;
  if (!normalize_bounds(relfn_awgn_bound_names(), bounds_csv, bounds)) {
    std::fprintf(stderr, "error: --bounds must be a nonempty subset of {%s}\n",
                 relfn_awgn_bound_names());
    return 2;
  }
  relfn_awgn* ch = nullptr;
  relfn_status st = relfn_awgn_open(a, &ch);
  if (st != RELFN_OK) return report_failure(st);
  std::vector<std::vector<double>> values(bounds.size(),
                                          std::vector<double>(grid.rates.size()));
  for (size_t b = 0; b < bounds.size(); ++b) {
    st = relfn_awgn_curve(ch, bounds[b].c_str(), grid.rates.data(), grid.rates.size(),
                          values[b].data());
    if (st != RELFN_OK) {
      relfn_awgn_close(ch);
      return report_failure(st);
    }
  }
  relfn_awgn_close(ch);
  return write_curves_csv(out_path.empty() ? nullptr : out_path.c_str(), grid.rates,
                          bounds, values);
}

int open_code_or_fail(const std::string& path, relfn_code** code) {
  int bad_line = 0;
  const relfn_status st = relfn_code_open(path.c_str(), code, &bad_line);
  if (st != RELFN_OK) {
    if (bad_line > 0)
      std::fprintf(stderr, "error: %s (line %d)\n", relfn_last_error(), bad_line);
    else
      std::fprintf(stderr, "error: %s\n", relfn_last_error());
    return exit_code(st);
  }
  return 0;
}

int cmd_oracle_pe(const std::string& path, double p) {
  relfn_code* code = nullptr;
  if (int rc = open_code_or_fail(path, &code)) return rc;
  double pe = 0;
  const relfn_status st = relfn_code_exact_pe(code, p, &pe);
  const int n = relfn_code_length(code);
  const size_t M = relfn_code_size(code);
  relfn_code_close(code);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("exact ML decoding error probability (ties count as errors)\n");
  std::printf("  n=%d M=%zu p=%.6f\n", n, M, p);
  std::printf("  P_e = %.9f  (exact enumeration of 2^n received words)\n", pe);
  return 0;
}

int cmd_oracle_mc(const std::string& path, double p, std::uint64_t trials,
                  std::uint64_t seed) {
  relfn_code* code = nullptr;
  if (int rc = open_code_or_fail(path, &code)) return rc;
  double est = 0, se = 0;
  const relfn_status st = relfn_code_mc_pe(code, p, trials, seed, &est, &se);
  const int n = relfn_code_length(code);
  const size_t M = relfn_code_size(code);
  relfn_code_close(code);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("Monte-Carlo ML decoding error probability (ties count as errors)\n");
  std::printf("  n=%d M=%zu p=%.6f trials=%llu seed=%llu rng=%s\n", n, M, p,
              (unsigned long long)trials, (unsigned long long)seed, relfn_mc_algorithm());
  std::printf("  P_e = %.9f +- %.9f  (1 standard error)\n", est, se);
  return 0;
}

int cmd_oracle_pairwise(int n, double omega, double p) {
  double fin = 0, asym = 0;
  const relfn_status st = relfn_oracle_pairwise(n, omega, p, &fin, &asym);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("equidistant-set log-probability, pair at relative distance omega\n");
  std::printf("  n=%d omega=%.6f p=%.6f (even-rounded w=%d)\n", n, omega, p,
              2 * (int)std::nearbyint(omega * n / 2.0));
  std::printf("  finite-n (1/n)log2 = %.9f bits  (exact log-gamma)\n", fin);
  std::printf("  asymptote A(omega) = %.9f bits  (closed form)\n", asym);
  std::printf("  gap = %.9f\n", fin - asym);
  return 0;
}

int cmd_oracle_joint(int n, double omega, double lambda, double p) {
  double joint = 0, cond = 0, asym = 0;
  const relfn_status st = relfn_oracle_joint(n, omega, lambda, p, &joint, &cond, &asym);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("conditional overlap log-probability, triangle (omega, omega, lambda)\n");
  std::printf("  n=%d omega=%.6f lambda=%.6f p=%.6f\n", n, omega, lambda, p);
  std::printf("  finite-n joint (1/n)log2       = %.9f bits  (exact log-gamma)\n", joint);
  std::printf("  finite-n conditional (1/n)log2 = %.9f bits\n", cond);
  std::printf("  asymptote B(omega,lambda)      = %.9f bits  (optimizer tol 1e-11)\n",
              asym);
  std::printf("  gap = %.9f\n", cond - asym);
  return 0;
}

int cmd_oracle_krawtchouk(int n, double tau, double omega) {
  double fin = 0, asym = 0;
  const relfn_status st = relfn_oracle_krawtchouk(n, tau, omega, &fin, &asym);
  if (st != RELFN_OK) return report_failure(st);
  std::printf("Krawtchouk polynomial exponent K_{tau n}(omega n)\n");
  std::printf("  n=%d tau=%.6f omega=%.6f (k=%d, x=%d)\n", n, tau, omega,
              (int)std::nearbyint(tau * n), (int)std::nearbyint(omega * n));
  std::printf("  finite-n (1/n)log2|K| = %.9f bits  (exact recurrence)\n", fin);
  std::printf("  asymptote k(tau,omega) = %.9f bits  (quadrature tol 1e-9)\n", asym);
  std::printf("  gap = %.9f\n", fin - asym);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reliability-function bounds and finite-length decoding oracles"};
  app.require_subcommand(1);

  // bsc
  auto* bsc = app.add_subcommand("bsc", "binary symmetric channel (rates in bits)");
  bsc->require_subcommand(1);
  double p = 0.01;
  std::string csv_path, rates_spec, bounds_csv, out_path, code_path;

  auto* bsc_lm = bsc->add_subcommand("landmarks", "threshold rates and channel constants");
  bsc_lm->add_option("--p", p, "crossover probability in (0, 1/2)")->required();
  bsc_lm->add_option("--csv", csv_path, "also write name,value,unit rows to this file");

  auto* bsc_cv = bsc->add_subcommand("curves", "tabulate bounds to CSV (R,bound,value)");
  bsc_cv->add_option("--p", p, "crossover probability in (0, 1/2)")->required();
  bsc_cv->add_option("--rates", rates_spec, "rate grid start:stop:step (bits)")->required();
  bsc_cv->add_option("--bounds", bounds_csv, "comma list from the bound registry")
      ->required();
  bsc_cv->add_option("--out", out_path, "output CSV path (default stdout)");

  // awgn
  auto* awgn = app.add_subcommand("awgn", "Gaussian channel (rates in nats)");
  awgn->require_subcommand(1);
  double a = 2.0;
  auto* awgn_lm = awgn->add_subcommand("landmarks", "threshold rates and channel constants");
  awgn_lm->add_option("--a", a, "signal-to-noise ratio (> 0)")->required();
  awgn_lm->add_option("--csv", csv_path, "also write name,value,unit rows to this file");
  auto* awgn_cv = awgn->add_subcommand("curves", "tabulate bounds to CSV (R,bound,value)");
  awgn_cv->add_option("--a", a, "signal-to-noise ratio (> 0)")->required();
  awgn_cv->add_option("--rates", rates_spec, "rate grid start:stop:step (nats)")->required();
  awgn_cv->add_option("--bounds", bounds_csv, "comma list from the bound registry")
      ->required();
  awgn_cv->add_option("--out", out_path, "output CSV path (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "finite-length ground-truth experiments");
  oracle->require_subcommand(1);
  int n = 400;
  double omega = 0.2, lambda = 0.2, tau = 0.11;
  std::uint64_t trials = 1000000, seed = 1;

  auto* o_pe = oracle->add_subcommand("pe", "exact ML error probability of a code file");
  o_pe->add_option("--code", code_path, "code file, one 0/1 word per line")->required();
  o_pe->add_option("--p", p, "crossover probability in (0, 1/2)")->required();

  auto* o_mc = oracle->add_subcommand("mc", "seeded Monte-Carlo error probability");
  o_mc->add_option("--code", code_path, "code file, one 0/1 word per line")->required();
  o_mc->add_option("--p", p, "crossover probability in (0, 1/2)")->required();
  o_mc->add_option("--trials", trials, "number of trials (>= 1e4)");
  o_mc->add_option("--seed", seed, "random seed");

  auto* o_pw = oracle->add_subcommand("pairwise", "equidistant-set probability vs A(omega)");
  o_pw->add_option("--n", n, "block length")->required();
  o_pw->add_option("--omega", omega, "relative pair distance")->required();
  o_pw->add_option("--p", p, "crossover probability in (0, 1/2)")->required();

  auto* o_jt = oracle->add_subcommand("joint", "overlap probability vs B(omega,lambda)");
  o_jt->add_option("--n", n, "block length")->required();
  o_jt->add_option("--omega", omega, "relative pair distance")->required();
  o_jt->add_option("--lambda", lambda, "relative distance between the two neighbours")
      ->required();
  o_jt->add_option("--p", p, "crossover probability in (0, 1/2)")->required();

  auto* o_kr = oracle->add_subcommand("krawtchouk", "Krawtchouk value vs k(tau,omega)");
  o_kr->add_option("--n", n, "block length")->required();
  o_kr->add_option("--tau", tau, "relative degree")->required();
  o_kr->add_option("--omega", omega, "relative argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (bsc_lm->parsed()) return cmd_bsc_landmarks(p, csv_path);
  if (bsc_cv->parsed()) return cmd_bsc_curves(p, rates_spec, bounds_csv, out_path);
  if (awgn_lm->parsed()) return cmd_awgn_landmarks(a, csv_path);
  if (awgn_cv->parsed()) return cmd_awgn_curves(a, rates_spec, bounds_csv, out_path);
  if (o_pe->parsed()) return cmd_oracle_pe(code_path, p);
  if (o_mc->parsed()) return cmd_oracle_mc(code_path, p, trials, seed);
  if (o_pw->parsed()) return cmd_oracle_pairwise(n, omega, p);
  if (o_jt->parsed()) return cmd_oracle_joint(n, omega, lambda, p);
  if (o_kr->parsed()) return cmd_oracle_krawtchouk(n, tau, omega);
  return 2;
}
