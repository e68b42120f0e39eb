/* relfn — reliability-function (error exponent) bounds for the binary
 * symmetric and Gaussian channels, with exact finite-length decoding oracles.
 *
 * C API of the shared library. Handles are opaque; every function returns a
 * relfn_status and reports results through out-parameters. The message for
 * the most recent failure on the calling thread is available from
 * relfn_last_error().
 */
#ifndef RELFN_H
#define RELFN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RELFN_API __declspec(dllexport)
#else
#define RELFN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relfn_status {
  RELFN_OK = 0,
  RELFN_ERR_DOMAIN = 1,   /* argument outside the mathematical domain */
  RELFN_ERR_NUMERIC = 2,  /* a numerical routine failed to converge */
  RELFN_ERR_IO = 3,       /* malformed or unreadable input file */
  RELFN_ERR_RESOURCE = 4, /* enumeration/size budget exceeded */
  RELFN_ERR_ARG = 5       /* null pointer or malformed argument */
} relfn_status;

RELFN_API const char *relfn_version(void);

/* Thread-local message describing the last failing call on this thread. */
RELFN_API const char *relfn_last_error(void);

/* ---- binary symmetric channel ---- */

typedef struct relfn_bsc relfn_bsc;

RELFN_API relfn_status relfn_bsc_open(double p, relfn_bsc **out);
RELFN_API void relfn_bsc_close(relfn_bsc *ch);

typedef struct relfn_bsc_landmarks {
  double p, u, rho, delta1;
  double r_x, r_crit, r1; /* bits per symbol */
  double r0, r0_star;     /* valid only when the matching found flag is 1 */
  int r0_found, r0_star_found;
  int tight_window; /* 1 when r1 < r0_star (random coding tight on [r1, r_crit]) */
} relfn_bsc_landmarks;

/* Heavy call: locates the r0 / r0_star threshold rates by scan + bisection. */
RELFN_API relfn_status relfn_bsc_landmarks_compute(relfn_bsc *ch,
                                                   relfn_bsc_landmarks *out);

/* Comma-separated registry of BSC bound names accepted below. */
RELFN_API const char *relfn_bsc_bound_names(void);

/* Evaluate one named bound at one rate (bits). */
RELFN_API relfn_status relfn_bsc_eval(relfn_bsc *ch, const char *bound, double rate,
                                      double *out);

/* Evaluate one named bound on a rate grid; out must hold count doubles. */
RELFN_API relfn_status relfn_bsc_curve(relfn_bsc *ch, const char *bound,
                                       const double *rates, size_t count, double *out);

/* ---- Gaussian channel (rates and exponents in nats) ---- */

typedef struct relfn_awgn relfn_awgn;

RELFN_API relfn_status relfn_awgn_open(double a, relfn_awgn **out);
RELFN_API void relfn_awgn_close(relfn_awgn *ch);

typedef struct relfn_awgn_landmarks {
  double a;
  double r_x, theta_x, r_crit, r1; /* rates in nats, theta_x in radians */
  double r_star;                   /* valid only when r_star_found is 1 */
  int r_star_found;
  int e0_tight; /* 1 when r1 <= r_star (random coding tight on [r1, r_crit]) */
} relfn_awgn_landmarks;

RELFN_API relfn_status relfn_awgn_landmarks_compute(relfn_awgn *ch,
                                                    relfn_awgn_landmarks *out);

RELFN_API const char *relfn_awgn_bound_names(void);

RELFN_API relfn_status relfn_awgn_eval(relfn_awgn *ch, const char *bound,
                                       double rate_nats, double *out);

RELFN_API relfn_status relfn_awgn_curve(relfn_awgn *ch, const char *bound,
                                        const double *rates, size_t count,
                                        double *out);

/* ---- finite-length oracles ---- */

typedef struct relfn_code relfn_code;

/* Code file format: one codeword per line, characters '0'/'1', no separators.
 * On RELFN_ERR_IO, *bad_line (when non-null) holds the 1-based offending line,
 * or 0 when the failure is not line-specific. */
RELFN_API relfn_status relfn_code_open(const char *path, relfn_code **out,
                                       int *bad_line);
RELFN_API relfn_status relfn_code_from_strings(const char *const *words, size_t count,
                                               relfn_code **out);
RELFN_API void relfn_code_close(relfn_code *code);
RELFN_API int relfn_code_length(const relfn_code *code);
RELFN_API size_t relfn_code_size(const relfn_code *code);

/* Exact ML error probability (ties decode as errors); budget n <= 26. */
RELFN_API relfn_status relfn_code_exact_pe(const relfn_code *code, double p,
                                           double *out);

/* Seeded Monte-Carlo estimate; deterministic in (seed, trials). */
RELFN_API relfn_status relfn_code_mc_pe(const relfn_code *code, double p,
                                        uint64_t trials, uint64_t seed,
                                        double *estimate, double *std_error);

/* Identifier of the Monte-Carlo random generator scheme. */
RELFN_API const char *relfn_mc_algorithm(void);

/* (1/n) log2 of the equidistant-set probability at relative distance omega,
 * and its asymptote A(omega) = omega log2(2 sqrt(p(1-p))). */
RELFN_API relfn_status relfn_oracle_pairwise(int n, double omega, double p,
                                             double *finite_n, double *asymptote);

/* Conditional overlap log-probability at (omega, lambda) and its asymptote
 * B(omega, lambda); joint may be null. */
RELFN_API relfn_status relfn_oracle_joint(int n, double omega, double lambda, double p,
                                          double *joint, double *conditional,
                                          double *asymptote);

/* (1/n) log2 |K_{tau n}(omega n)| and the asymptotic exponent k(tau, omega). */
RELFN_API relfn_status relfn_oracle_krawtchouk(int n, double tau, double omega,
                                               double *finite_n, double *asymptote);

#ifdef __cplusplus
}
#endif

#endif /* RELFN_H */
