#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relfn/errors.hpp"

// Finite-length ground truth: exact and Monte-Carlo maximum-likelihood
// decoding error probability for explicit codes, distance distributions,
// exact Krawtchouk values, and the combinatorial equidistant-set
// probabilities that the asymptotic exponents A and B are checked against.
//
// Conventions pinned here: ML ties count as errors; only even pair distances
// are admitted for the equidistant sets; fractional counts are rounded half
// to even.

namespace relfn {

class BinaryCode {
 public:
  // One codeword per line, characters '0'/'1', no separators. Unequal line
  // lengths, other characters, duplicates, or fewer than two words are
  // rejected (io_error carries the 1-based offending line).
  static BinaryCode from_file(const std::string& path);
  static BinaryCode from_strings(const std::vector<std::string>& rows);

  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  double rate() const;
  int blocks() const { return blocks_; }
  const std::uint64_t* word(std::size_t i) const { return &bits_[i * blocks_]; }
  int distance(std::size_t i, std::size_t j) const;
  int distance_to(std::size_t i, const std::uint64_t* y) const;

 private:
  BinaryCode() = default;
  void finish(std::vector<std::string> rows);
  int n_ = 0;
  int blocks_ = 0;
  std::vector<std::string> words_;  // original row text, for diagnostics
  std::vector<std::uint64_t> bits_;
};

struct DistanceDistribution {
  std::vector<std::vector<long long>> per_word;  // per_word[i][w]
  std::vector<long long> pair_totals;            // sum over i, exact integers
  std::vector<double> average;                   // pair_totals[w] / M
};
DistanceDistribution distance_distribution(const BinaryCode& code);

/// Exact ML-decoding error probability by enumeration of all 2^n received
/// words; ties decode as errors. Enumeration budget n <= 26.
double exact_pe_ml(const BinaryCode& code, double p);

struct MCResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t errors = 0;
  std::uint64_t trials = 0;
};

/// Seeded Monte-Carlo estimate of the ML error probability. Each trial runs
/// its own counter-derived generator stream, so the result depends only on
/// (seed, trials). Requires trials >= 1e4.
MCResult monte_carlo_pe(const BinaryCode& code, double p, std::uint64_t trials,
                        std::uint64_t seed);

/// Identifier of the Monte-Carlo generator scheme, recorded in reports.
const char* mc_algorithm_id();

// Geometry of the equidistant sets for a codeword pair (and a third word for
// the joint set): pair distance w, third-word distance l, both even, and the
// distance level t = w/2 + round(p(n-w)).
struct PairwiseGeometry {
  int n = 0, w = 0, l = 0, t = 0;
  PairwiseGeometry(int n_, int w_, int l_, double p);
};

/// (1/n) log2 of the probability that a received word lands exactly at
/// distance t from both codewords of a pair at distance w. Returns the
/// minus-infinity marker when the level t is unreachable.
double pairwise_set_logprob(const PairwiseGeometry& geom, double p);

/// (1/n) log2 of the probability of landing at level t from all three words
/// of a (w, w, l) triangle; log-sum-exp over the overlap split. Returns the
/// minus-infinity marker when no split is feasible.
double joint_set_logprob(const PairwiseGeometry& geom, double p);

// Value in (sign, log2|.|) form; sign 0 encodes an exact zero.
struct SignedLog {
  int sign = 0;
  double log2abs = 0.0;
};

/// Exact binary Krawtchouk value K_k(x) for length n via the three-term
/// recurrence carried in signed-log form.
SignedLog krawtchouk_value(int n, int k, int x);

struct ReverseUnionBound {
  int w = 0;       // neighbour distance
  double rhs = 0;  // sum of pair probabilities minus pairwise overlaps
};

/// Exact evaluation (enumeration budget n <= 20) of the reverse-union lower
/// bound on the error probability, one entry per even distance w present in
/// the code. exact_pe_ml must dominate every entry.
std::vector<ReverseUnionBound> reverse_union_lower_bounds(const BinaryCode& code,
                                                          double p);

}  // namespace relfn
