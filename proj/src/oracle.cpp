#include "relfn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cfenv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "relfn/bsc.hpp"

namespace relfn {

namespace {

constexpr double kLog2E = 1.4426950408889634;  // 1/ln 2

double log2_binomial(long long n, long long k) {
  if (k < 0 || k > n) return minus_infinity();
  if (k == 0 || k == n) return 0.0;
  return (std::lgamma((double)n + 1.0) - std::lgamma((double)k + 1.0) -
          std::lgamma((double)(n - k) + 1.0)) *
         kLog2E;
}

long long round_half_even(double x) { return (long long)std::nearbyint(x); }

void check_p(double p) {
  if (!(p > 0.0) || !(p < 0.5))
    throw domain_error("crossover probability must be in (0, 1/2)");
}

}  // namespace

void BinaryCode::finish(std::vector<std::string> rows) {
  if (rows.size() < 2) throw io_error("code must contain at least two words");
  n_ = (int)rows.front().size();
  if (n_ == 0) throw io_error("empty codeword", 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((int)rows[i].size() != n_)
      throw io_error("codeword length differs from first line", (int)i + 1);
    for (char c : rows[i])
      if (c != '0' && c != '1')
        throw io_error("codeword characters must be '0' or '1'", (int)i + 1);
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!seen.insert(rows[i]).second)
      throw io_error("duplicate codeword", (int)i + 1);
  blocks_ = (n_ + 63) / 64;
  bits_.assign(rows.size() * blocks_, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int b = 0; b < n_; ++b)
      if (rows[i][b] == '1') bits_[i * blocks_ + b / 64] |= 1ull << (b % 64);
  words_ = std::move(rows);
}

BinaryCode BinaryCode::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open code file: " + path);
  std::vector<std::string> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  BinaryCode c;
  c.finish(std::move(rows));
  return c;
}

BinaryCode BinaryCode::from_strings(const std::vector<std::string>& rows) {
  BinaryCode c;
  c.finish(rows);
  return c;
}

double BinaryCode::rate() const { return std::log2((double)size()) / n_; }

int BinaryCode::distance(std::size_t i, std::size_t j) const {
  int d = 0;
  for (int b = 0; b < blocks_; ++b)
    d += std::popcount(bits_[i * blocks_ + b] ^ bits_[j * blocks_ + b]);
  return d;
}

int BinaryCode::distance_to(std::size_t i, const std::uint64_t* y) const {
  int d = 0;
  for (int b = 0; b < blocks_; ++b) d += std::popcount(bits_[i * blocks_ + b] ^ y[b]);
  return d;
}

DistanceDistribution distance_distribution(const BinaryCode& code) {
  const std::size_t M = code.size();
  const int n = code.n();
  DistanceDistribution dd;
  dd.per_word.assign(M, std::vector<long long>(n + 1, 0));
  dd.pair_totals.assign(n + 1, 0);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      if (i == j) continue;
      const int w = code.distance(i, j);
      ++dd.per_word[i][w];
      ++dd.pair_totals[w];
    }
  dd.average.resize(n + 1);
  for (int w = 0; w <= n; ++w) dd.average[w] = (double)dd.pair_totals[w] / (double)M;
  return dd;
}

double exact_pe_ml(const BinaryCode& code, double p) {
  check_p(p);
  const int n = code.n();
  if (n > 26) throw resource_error("exact_pe_ml: enumeration budget is n <= 26");
  const std::size_t M = code.size();
  std::vector<double> weight(n + 1);
  for (int d = 0; d <= n; ++d)
    weight[d] = std::exp((double)d * std::log(p) + (double)(n - d) * std::log(1.0 - p));
  std::vector<std::uint64_t> cw(M);
  for (std::size_t i = 0; i < M; ++i) cw[i] = code.word(i)[0];
  // P(correct) sums, over received words with a unique closest codeword, the
  // probability of the noise pattern that produced them.
  double correct = 0.0;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t y = 0; y < total; ++y) {
    int d1 = n + 1, m1 = 0;
    for (std::size_t i = 0; i < M; ++i) {
      const int d = std::popcount(cw[i] ^ y);
      if (d < d1) {
        d1 = d;
        m1 = 1;
      } else if (d == d1) {
        ++m1;
      }
    }
    if (m1 == 1) correct += weight[d1];
  }
  return 1.0 - correct / (double)M;
}

namespace {

// SplitMix64 output function; each Monte-Carlo trial runs its own stream
// seeded by mix(seed, trial), making the result independent of evaluation
// order and chunking.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ull * (trial + 1)));
  return g.next();
}

}  // namespace

const char* mc_algorithm_id() { return "splitmix64-per-trial-v1"; }

MCResult monte_carlo_pe(const BinaryCode& code, double p, std::uint64_t trials,
                        std::uint64_t seed) {
  check_p(p);
  if (trials < 10000) throw domain_error("monte_carlo_pe: need at least 1e4 trials");
  const int n = code.n();
  const int nb = code.blocks();
  const std::size_t M = code.size();
  std::vector<std::uint64_t> y(nb);
  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 g(trial_key(seed, t));
    std::size_t sent = (std::size_t)(g.next_unit() * (double)M);
    if (sent >= M) sent = M - 1;
    const std::uint64_t* x = code.word(sent);
    for (int b = 0; b < nb; ++b) y[b] = x[b];
    for (int b = 0; b < n; ++b)
      if (g.next_unit() < p) y[b / 64] ^= 1ull << (b % 64);
    const int d_sent = code.distance_to(sent, y.data());
    bool err = false;
    for (std::size_t j = 0; j < M && !err; ++j) {
      if (j == sent) continue;
      if (code.distance_to(j, y.data()) <= d_sent) err = true;  // ties are errors
    }
    if (err) ++errors;
  }
  MCResult r;
  r.errors = errors;
  r.trials = trials;
  r.estimate = (double)errors / (double)trials;
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / (double)trials);
  return r;
}

PairwiseGeometry::PairwiseGeometry(int n_, int w_, int l_, double p) {
  check_p(p);
  if (n_ <= 0) throw domain_error("PairwiseGeometry: n must be positive");
  if (w_ < 0 || w_ > n_ || l_ < 0) throw domain_error("PairwiseGeometry: bad distances");
  if (w_ % 2 != 0 || l_ % 2 != 0)
    throw domain_error("PairwiseGeometry: only even distances are admitted");
  if (l_ > 2 * w_) throw domain_error("PairwiseGeometry: triangle needs l <= 2w");
  if (w_ + l_ / 2 > n_)
    throw domain_error("PairwiseGeometry: triangle does not fit in length n");
  n = n_;
  w = w_;
  l = l_;
  t = w / 2 + (int)round_half_even(p * (double)(n - w));
  if (t < 0 || t > n) throw domain_error("PairwiseGeometry: distance level outside [0,n]");
}

double pairwise_set_logprob(const PairwiseGeometry& g, double p) {
  check_p(p);
  const long long outside = g.t - g.w / 2;
  if (outside < 0 || outside > g.n - g.w) return minus_infinity();
  const double lp = log2_binomial(g.w, g.w / 2) + log2_binomial(g.n - g.w, outside) +
                    (double)g.t * std::log2(p) + (double)(g.n - g.t) * std::log2(1.0 - p);
  return lp / g.n;
}

double joint_set_logprob(const PairwiseGeometry& g, double p) {
  check_p(p);
  const long long pr = g.t - g.w / 2;
  const long long half_l = g.l / 2;
  if (pr < 0) return minus_infinity();
  const long long mlo =
      std::max({0ll, (long long)(g.l - g.w) / 2, pr - (g.n - g.w - half_l)});
  const long long mhi = std::min({half_l, pr, (long long)g.w / 2});
  if (mlo > mhi) return minus_infinity();
  // log-sum-exp over the overlap split m
  double mx = minus_infinity();
  std::vector<double> terms;
  terms.reserve(mhi - mlo + 1);
  for (long long m = mlo; m <= mhi; ++m) {
    const double v = 2.0 * log2_binomial(half_l, m) +
                     log2_binomial(g.w - half_l, g.w / 2 - m) +
                     log2_binomial(g.n - g.w - half_l, pr - m);
    if (v == minus_infinity()) continue;
    terms.push_back(v);
    mx = std::max(mx, v);
  }
  if (terms.empty()) return minus_infinity();
  double acc = 0.0;
  for (double v : terms) acc += std::exp2(v - mx);
  const double lp = mx + std::log2(acc) + (double)g.t * std::log2(p) +
                    (double)(g.n - g.t) * std::log2(1.0 - p);
  return lp / g.n;
}

namespace {

SignedLog sl_zero() { return {0, minus_infinity()}; }

SignedLog sl_scale(const SignedLog& a, double factor) {
  if (a.sign == 0 || factor == 0.0) return sl_zero();
  SignedLog r;
  r.sign = factor > 0.0 ? a.sign : -a.sign;
  r.log2abs = a.log2abs + std::log2(std::abs(factor));
  return r;
}

SignedLog sl_add(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const SignedLog& hi = a.log2abs >= b.log2abs ? a : b;
  const SignedLog& lo = a.log2abs >= b.log2abs ? b : a;
  const double d = lo.log2abs - hi.log2abs;  // <= 0
  if (a.sign == b.sign)
    return {a.sign, hi.log2abs + std::log1p(std::exp2(d)) * kLog2E};
  const double one_minus = 1.0 - std::exp2(d);
  if (one_minus <= 0.0) return sl_zero();  // exact cancellation
  return {hi.sign, hi.log2abs + std::log2(one_minus)};
}

}  // namespace

SignedLog krawtchouk_value(int n, int k, int x) {
  if (n <= 0 || k < 0 || k > n || x < 0 || x > n)
    throw domain_error("krawtchouk_value: need 0 <= k, x <= n");
  SignedLog prev{1, 0.0};  // K_0 = 1
  if (k == 0) return prev;
  const double c = (double)n - 2.0 * (double)x;
  SignedLog cur = c > 0 ? SignedLog{1, std::log2(c)}
                        : (c < 0 ? SignedLog{-1, std::log2(-c)} : sl_zero());
  for (int j = 1; j < k; ++j) {
    // (j+1) K_{j+1} = (n-2x) K_j - (n-j+1) K_{j-1}
    SignedLog next = sl_add(sl_scale(cur, c), sl_scale(prev, -(double)(n - j + 1)));
    next = sl_scale(next, 1.0 / (double)(j + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<ReverseUnionBound> reverse_union_lower_bounds(const BinaryCode& code,
                                                          double p) {
  check_p(p);
  const int n = code.n();
  if (n > 20) throw resource_error("reverse_union_lower_bounds: budget is n <= 20");
  const std::size_t M = code.size();
  std::vector<double> weight(n + 1);
  for (int d = 0; d <= n; ++d)
    weight[d] = std::exp((double)d * std::log(p) + (double)(n - d) * std::log(1.0 - p));
  // distance level t_w for each even pair distance w
  std::vector<int> level(n + 1, -1);
  std::vector<std::vector<int>> dist(M, std::vector<int>(M, 0));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      const int w = code.distance(i, j);
      dist[i][j] = w;
      if (i != j && w % 2 == 0)
        level[w] = w / 2 + (int)round_half_even(p * (double)(n - w));
    }
  // counts of received words in X_ij and X_ij ∩ X_ik
  std::vector<std::vector<long long>> cnt2(M, std::vector<long long>(M, 0));
  std::vector<long long> cnt3(M * M * M, 0);
  std::vector<int> dy(M);
  std::vector<std::uint64_t> cw(M);
  for (std::size_t i = 0; i < M; ++i) cw[i] = code.word(i)[0];
  std::vector<std::size_t> members;
  for (std::uint64_t y = 0; y < (1ull << n); ++y) {
    for (std::size_t i = 0; i < M; ++i) dy[i] = std::popcount(cw[i] ^ y);
    for (std::size_t i = 0; i < M; ++i) {
      members.clear();
      for (std::size_t j = 0; j < M; ++j) {
        if (j == i) continue;
        const int w = dist[i][j];
        if (w % 2 != 0) continue;  // empty set by convention at odd distance
        if (dy[i] == level[w] && dy[j] == level[w]) members.push_back(j);
      }
      for (std::size_t a = 0; a < members.size(); ++a) {
        ++cnt2[i][members[a]];
        for (std::size_t b = 0; b < members.size(); ++b)
          if (a != b) ++cnt3[(i * M + members[a]) * M + members[b]];
      }
    }
  }
  std::vector<ReverseUnionBound> out;
  for (int w = 2; w <= n; w += 2) {
    if (level[w] < 0) continue;
    double total = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      double per_i = 0.0;
      for (std::size_t j = 0; j < M; ++j) {
        if (j == i || dist[i][j] != w) continue;
        double term = (double)cnt2[i][j] * weight[level[w]];
        for (std::size_t kk = 0; kk < M; ++kk) {
          if (kk == i || kk == j || dist[i][kk] != w) continue;
          term -= (double)cnt3[(i * M + j) * M + kk] * weight[level[w]];
        }
        per_i += term;
      }
      total += per_i;
    }
    out.push_back({w, total / (double)M});
  }
  return out;
}

}  // namespace relfn
