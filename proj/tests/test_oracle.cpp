#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "relfn/bsc.hpp"
#include "relfn/entropy.hpp"
#include "relfn/oracle.hpp"
#include "relfn/poly_exponents.hpp"

using namespace relfn;

namespace {

// all 2^k combinations of k generator rows given as 0/1 strings
std::vector<std::string> span_code(const std::vector<std::string>& gens) {
  const int n = (int)gens.front().size();
  std::vector<std::string> words;
  for (unsigned m = 0; m < (1u << gens.size()); ++m) {
    std::string w(n, '0');
    for (size_t g = 0; g < gens.size(); ++g)
      if (m & (1u << g))
        for (int b = 0; b < n; ++b)
          if (gens[g][b] == '1') w[b] = w[b] == '0' ? '1' : '0';
    words.push_back(w);
  }
  return words;
}

BinaryCode hamming74() {
  return BinaryCode::from_strings(
      span_code({"1000110", "0100101", "0010011", "0001111"}));
}

BinaryCode random_linear_12_4() {
  return BinaryCode::from_strings(
      span_code({"100011010110", "010001101011", "001010110101", "000110011110"}));
}

}  // namespace

TEST_CASE("code parsing and validation") {
  CHECK_THROWS_AS(BinaryCode::from_strings({"0101"}), io_error);  // M < 2
  try {
    BinaryCode::from_strings({"0101", "01"});
    FAIL("expected io_error");
  } catch (const io_error& e) {
    CHECK(e.line == 2);
  }
  try {
    BinaryCode::from_strings({"0101", "0102"});
    FAIL("expected io_error");
  } catch (const io_error& e) {
    CHECK(e.line == 2);
  }
  try {
    BinaryCode::from_strings({"0101", "1100", "0101"});
    FAIL("expected io_error");
  } catch (const io_error& e) {
    CHECK(e.line == 3);
  }
  const auto c = BinaryCode::from_strings({"000", "111"});
  CHECK(c.n() == 3);
  CHECK(c.size() == 2);
  CHECK(c.distance(0, 1) == 3);
  CHECK(c.rate() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("distance distribution") {
  const auto rep = BinaryCode::from_strings({"000", "111"});
  const auto dd = distance_distribution(rep);
  CHECK(dd.per_word[0][3] == 1);
  CHECK(dd.per_word[1][3] == 1);
  CHECK(dd.average[3] == doctest::Approx(1.0));
  CHECK(dd.average[1] == doctest::Approx(0.0));

  const auto ham = hamming74();
  const auto hd = distance_distribution(ham);
  // every codeword of a linear code sees the same profile: B_3=7, B_4=7, B_7=1
  for (size_t i = 0; i < ham.size(); ++i) {
    CHECK(hd.per_word[i][3] == 7);
    CHECK(hd.per_word[i][4] == 7);
    CHECK(hd.per_word[i][7] == 1);
  }
  // per-word and average counts always sum to M - 1
  for (const auto& code : {rep, ham, random_linear_12_4()}) {
    const auto d = distance_distribution(code);
    const long long M = (long long)code.size();
    long long pair_sum = 0;
    for (long long t : d.pair_totals) pair_sum += t;
    CHECK(pair_sum == M * (M - 1));
    for (const auto& row : d.per_word) {
      long long s = 0;
      for (long long t : row) s += t;
      CHECK(s == M - 1);
    }
  }
}

TEST_CASE("exact ML error probability") {
  const auto rep = BinaryCode::from_strings({"000", "111"});
  CHECK(std::abs(exact_pe_ml(rep, 0.1) - 0.028) <= 1e-12);
  const auto bit = BinaryCode::from_strings({"0", "1"});
  for (double p : {0.05, 0.2, 0.4})
    CHECK(exact_pe_ml(bit, p) == doctest::Approx(p).epsilon(1e-12));
  // vanishing noise, monotone growth in p
  CHECK(exact_pe_ml(rep, 1e-6) <= 1e-5);
  double prev = 0.0;
  const auto ham = hamming74();
  for (double p : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
    const double pe = exact_pe_ml(ham, p);
    CHECK(pe >= prev);
    prev = pe;
  }
  std::vector<std::string> big = {std::string(27, '0'), std::string(27, '1')};
  CHECK_THROWS_AS(exact_pe_ml(BinaryCode::from_strings(big), 0.1), resource_error);
}

TEST_CASE("Monte-Carlo estimate: agreement and determinism") {
  const auto rep = BinaryCode::from_strings({"000", "111"});
  const auto r = monte_carlo_pe(rep, 0.1, 1000000, 42);
  CHECK(std::abs(r.estimate - 0.028) <= 4.0 * r.std_error);
  const auto r2 = monte_carlo_pe(rep, 0.1, 1000000, 42);
  CHECK(r.estimate == r2.estimate);  // bit-identical under a fixed seed
  CHECK(r.errors == r2.errors);
  const auto r3 = monte_carlo_pe(rep, 0.1, 1000000, 43);
  CHECK(r.errors != r3.errors);

  // agreement with the exact oracle across a small suite
  for (const auto& code :
       {BinaryCode::from_strings({"00000", "11111"}),
        BinaryCode::from_strings({"0000000", "1111111"}), hamming74(),
        random_linear_12_4()}) {
    const double pe = exact_pe_ml(code, 0.08);
    const auto mc = monte_carlo_pe(code, 0.08, 200000, 7);
    CHECK(std::abs(mc.estimate - pe) <= 4.0 * std::max(mc.std_error, 1e-6));
  }
  CHECK(monte_carlo_pe(rep, 1e-12, 10000, 1).estimate == doctest::Approx(0.0));
  CHECK_THROWS_AS(monte_carlo_pe(rep, 0.1, 100, 1), domain_error);
  CHECK(std::string(mc_algorithm_id()).find("splitmix64") != std::string::npos);
}

TEST_CASE("pairwise geometry validation") {
  CHECK_NOTHROW(PairwiseGeometry(400, 80, 0, 0.1));
  CHECK_THROWS_AS(PairwiseGeometry(400, 81, 0, 0.1), domain_error);   // odd w
  CHECK_THROWS_AS(PairwiseGeometry(400, 80, 41, 0.1), domain_error);  // odd l
  CHECK_THROWS_AS(PairwiseGeometry(100, 10, 22, 0.1), domain_error);  // l > 2w
  CHECK_THROWS_AS(PairwiseGeometry(10, 8, 8, 0.1), domain_error);     // w + l/2 > n
  const PairwiseGeometry g(400, 80, 0, 0.1);
  CHECK(g.t == 40 + 32);
}

TEST_CASE("pairwise set probability approaches A(omega)") {
  const ChannelBSC ch(0.1);
  const PairwiseGeometry g(400, 80, 0, 0.1);
  const double v = pairwise_set_logprob(g, 0.1);
  CHECK(std::abs(v - pairwise_exponent_A(0.2, ch)) <= 0.02);
  // w = 0 collapses to the binomial mode; exponent tends to zero
  const PairwiseGeometry g0(400, 0, 0, 0.1);
  CHECK(std::abs(pairwise_set_logprob(g0, 0.1)) <= 0.02);
  // doubling n roughly halves the gap
  const PairwiseGeometry gh(200, 40, 0, 0.1);
  const double gap_h = pairwise_set_logprob(gh, 0.1) - pairwise_exponent_A(0.2, ch);
  const double gap = v - pairwise_exponent_A(0.2, ch);
  CHECK(gap / gap_h >= 0.3);
  CHECK(gap / gap_h <= 0.7);
}

TEST_CASE("joint set probability: exact enumeration cross-check") {
  // x_i = 0^16, x_j = 1^6 0^10, x_k = 1^4 0^2 1^2 0^8: distances (6, 6, 4)
  const int n = 16, w = 6, l = 4;
  const double p = 0.25;
  const std::uint64_t xj = 0b00111111ull;  // bits 0..5
  const std::uint64_t xk = 0b11001111ull;  // bits 0..3 and 6..7
  REQUIRE(std::popcount(xj) == w);
  REQUIRE(std::popcount(xk) == w);
  REQUIRE(std::popcount(xj ^ xk) == l);
  const PairwiseGeometry g(n, w, l, p);
  double pair_exact = 0.0, joint_exact = 0.0;
  for (std::uint64_t y = 0; y < (1ull << n); ++y) {
    const int di = std::popcount(y);
    const int dj = std::popcount(y ^ xj);
    const int dk = std::popcount(y ^ xk);
    const double weight = std::pow(p, di) * std::pow(1.0 - p, n - di);
    if (di == g.t && dj == g.t) pair_exact += weight;
    if (di == g.t && dj == g.t && dk == g.t) joint_exact += weight;
  }
  CHECK(pairwise_set_logprob(g, p) ==
        doctest::Approx(std::log2(pair_exact) / n).epsilon(1e-10));
  CHECK(joint_set_logprob(g, p) ==
        doctest::Approx(std::log2(joint_exact) / n).epsilon(1e-10));
}

TEST_CASE("joint set probability: degenerate cases") {
  // l = 0 makes the two sets identical: conditional mass 1
  const PairwiseGeometry g(600, 120, 0, 0.1);
  CHECK(joint_set_logprob(g, 0.1) ==
        doctest::Approx(pairwise_set_logprob(g, 0.1)).epsilon(1e-12));
  // the formula depends only on (n, w, l, p): swapping the two neighbours is a no-op
  const PairwiseGeometry gs(600, 120, 60, 0.1);
  CHECK(joint_set_logprob(gs, 0.1) == joint_set_logprob(gs, 0.1));
  // infeasible overlap split
  const PairwiseGeometry ge(100, 4, 8, 0.001);
  CHECK(joint_set_logprob(ge, 0.001) == minus_infinity());
}

TEST_CASE("Krawtchouk values: exact checks") {
  const auto one = krawtchouk_value(30, 0, 17);
  CHECK(one.sign == 1);
  CHECK(one.log2abs == doctest::Approx(0.0));
  // K_k(0) = C(n, k)
  for (int k : {1, 3, 7, 12}) {
    const auto v = krawtchouk_value(24, k, 0);
    CHECK(v.sign == 1);
    const double lc = (std::lgamma(25.0) - std::lgamma(k + 1.0) - std::lgamma(25.0 - k)) /
                      std::log(2.0);
    CHECK(v.log2abs == doctest::Approx(lc).epsilon(1e-9));
  }
  // K_1(x) = n - 2x, including the root at x = n/2
  CHECK(krawtchouk_value(4, 1, 2).sign == 0);
  CHECK(krawtchouk_value(10, 1, 7).sign == -1);
  CHECK(krawtchouk_value(10, 1, 7).log2abs == doctest::Approx(2.0));
  CHECK_THROWS_AS(krawtchouk_value(10, 11, 0), domain_error);
}

TEST_CASE("Krawtchouk recurrence against the direct sum") {
  // K_k(x) = sum_j (-1)^j C(x,j) C(n-x, k-j)
  const int n = 20;
  auto direct = [&](int k, int x) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      if (j > x || k - j > n - x) continue;
      double term = 1.0;
      for (int t = 0; t < j; ++t) term *= (double)(x - t) / (t + 1);
      for (int t = 0; t < k - j; ++t) term *= (double)(n - x - t) / (t + 1);
      acc += (j % 2 ? -term : term);
    }
    return acc;
  };
  for (int k : {2, 5, 9})
    for (int x : {1, 4, 8, 13}) {
      const double want = direct(k, x);
      const auto got = krawtchouk_value(n, k, x);
      if (want == 0.0) {
        CHECK(got.sign == 0);
      } else {
        CHECK(got.sign == (want > 0 ? 1 : -1));
        CHECK(got.log2abs == doctest::Approx(std::log2(std::abs(want))).epsilon(1e-9));
      }
    }
}

TEST_CASE("reverse-union lower bound never exceeds the exact error probability") {
  for (double p : {0.03, 0.08}) {
    for (const auto& code : {hamming74(), random_linear_12_4()}) {
      const double pe = exact_pe_ml(code, p);
      const auto bounds = reverse_union_lower_bounds(code, p);
      CHECK(!bounds.empty());
      for (const auto& b : bounds) CHECK(pe >= b.rhs - 1e-12);
    }
  }
  std::vector<std::string> big = {std::string(22, '0'), std::string(22, '1')};
  CHECK_THROWS_AS(reverse_union_lower_bounds(BinaryCode::from_strings(big), 0.1),
                  resource_error);
}
