#include <gtest/gtest.h>

#include <random>

#include "altruns/error.hpp"
#include "altruns/json_io.hpp"
#include "altruns/polynomial.hpp"
#include "oracle.hpp"

using namespace altruns;

namespace {

constexpr int kIterations = 300;

IntPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, long max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(0, max_coeff);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  c.back() += 1;
  return IntPolynomial(std::move(c));
}

std::vector<std::int64_t> small_coeffs(const IntPolynomial& f) {
  std::vector<std::int64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(IntPolynomial, AddExamples) {
  EXPECT_EQ(add_term(IntPolynomial{}, 2, 1), (IntPolynomial{0, 0, 1}));
  EXPECT_EQ(add(IntPolynomial{0, 1}, IntPolynomial{0, 1}), (IntPolynomial{0, 2}));
  EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), -1);
  EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
  EXPECT_EQ((IntPolynomial{0, 1, 2} - IntPolynomial{0, 1, 2}), IntPolynomial{});
  EXPECT_EQ((IntPolynomial{0, 0, 3, 1}).lowest_degree(), 2);
}

TEST(IntPolynomial, TypeBSumOverB2) {
  // All eight windows of B_2 with their altruns_B values.
  IntPolynomial f;
  for (int runs : {1, 2, 2, 1, 2, 2, 2, 2}) f.add_term(static_cast<std::size_t>(runs), 1);
  EXPECT_EQ(f, (IntPolynomial{0, 2, 6}));
}

TEST(OnePlusTPower, Binomials) {
  EXPECT_EQ(one_plus_t_power(0), (IntPolynomial{1}));
  EXPECT_EQ(one_plus_t_power(2), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(one_plus_t_power(5), (IntPolynomial{1, 5, 10, 10, 5, 1}));
  EXPECT_EQ(one_plus_t_power(64).coeff(32).get_str(), "1832624140942590534");
}

TEST(OnePlusTOrder, Examples) {
  EXPECT_EQ(one_plus_t_order(times_one_plus_t_power(IntPolynomial{0, 1}, 3)), 3u);
  EXPECT_EQ(one_plus_t_order(IntPolynomial{0, 2, 6}), 0u);
  EXPECT_EQ(one_plus_t_order(IntPolynomial{5}), 0u);
  EXPECT_EQ(one_plus_t_order(IntPolynomial{0, 1, 363, 3358, 8394, 8161, 2763}), 2u);
}

TEST(OnePlusTOrder, ZeroPolynomialIsAnError) {
  try {
    one_plus_t_order(IntPolynomial{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_polynomial);
  }
}

TEST(OnePlusTOrder, AddsExponentsExactly) {
  std::mt19937_64 rng(1);
  int tested = 0;
  while (tested < kIterations) {
    const IntPolynomial f = random_polynomial(rng, 6, 20);
    if (f.evaluate(-1) == 0) continue;
    const unsigned e = static_cast<unsigned>(rng() % 9);
    const IntPolynomial g = times_one_plus_t_power(f, e);
    ASSERT_EQ(one_plus_t_order(g), one_plus_t_order(f) + e);
    ASSERT_EQ(static_cast<int>(one_plus_t_order(g)), oracle::one_plus_t_order_taylor(small_coeffs(g)));
    ++tested;
  }
}

TEST(OnePlusTOrder, QuotientReconstructsInput) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < kIterations; ++it) {
    const IntPolynomial g = times_one_plus_t_power(random_polynomial(rng, 5, 9), static_cast<unsigned>(rng() % 6));
    const auto factored = factor_one_plus_t(g);
    ASSERT_NE(factored.quotient.evaluate(-1), 0);
    ASSERT_EQ(times_one_plus_t_power(factored.quotient, factored.order), g);
  }
}

TEST(SyntheticDivide, RemainderIsValue) {
  const IntPolynomial f{3, -2, 0, 1};
  for (long root : {-3L, -1L, 0L, 2L, 7L}) {
    const auto d = synthetic_divide(f, root);
    EXPECT_EQ(d.remainder, f.evaluate(root));
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ((IntPolynomial{0, 2, 6}).evaluate(1), 8);
  for (unsigned m = 1; m <= 10; ++m) EXPECT_EQ(one_plus_t_power(m).evaluate(-1), 0);
  EXPECT_EQ(one_plus_t_power(0).evaluate(-1), 1);
  EXPECT_EQ(IntPolynomial{}.evaluate(5), 0);
}

TEST(MomentSums, Examples) {
  const auto sq = moment_sums(one_plus_t_power(2), 1);
  EXPECT_EQ(sq.odd_side, 2);
  EXPECT_EQ(sq.even_side, 2);
  EXPECT_TRUE(sq.holds());

  const auto b2 = moment_sums(IntPolynomial{0, 2, 6}, 1);
  EXPECT_EQ(b2.odd_side, 2);
  EXPECT_EQ(b2.even_side, 12);
  EXPECT_FALSE(moment_identity_holds(IntPolynomial{0, 2, 6}, 1));
}

TEST(MomentSums, HoldBelowTheDivisibilityOrder) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < kIterations; ++it) {
    const unsigned m = static_cast<unsigned>(rng() % 9);
    const IntPolynomial f = times_one_plus_t_power(random_polynomial(rng, 6, 1000), m);
    for (unsigned k = 1; k + 1 <= m; ++k) ASSERT_TRUE(moment_identity_holds(f, k)) << to_string(f) << " k=" << k;
  }
}

TEST(MomentSums, LargeWeightsStayExact) {
  // 40^12 overflows 64 bits.
  const auto f = IntPolynomial::monomial(40, 3);
  EXPECT_EQ(moment_sums(f, 12).even_side.get_str(), "50331648000000000000");
}

TEST(ToString, Rendering) {
  EXPECT_EQ(to_string(IntPolynomial{}), "0");
  EXPECT_EQ(to_string(IntPolynomial{0, 2, 6}), "2t + 6t^2");
  EXPECT_EQ(to_string(IntPolynomial{1, -1, 0, 1}), "1 - t + t^3");
}

TEST(PolynomialJson, RoundTripsArbitraryPrecision) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    IntPolynomial f = times_one_plus_t_power(random_polynomial(rng, 5, 1L << 40), 40);
    const auto j = polynomial_to_json(f);
    ASSERT_TRUE(j.at("coeffs").at(0).is_string());
    ASSERT_EQ(polynomial_from_json(nlohmann::json::parse(j.dump())), f);
  }
  EXPECT_EQ(polynomial_to_json(IntPolynomial{0, 2, 6}).dump(), R"({"coeffs":["0","2","6"]})");
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(R"({"coeffs":[0,2,6]})")), (IntPolynomial{0, 2, 6}));
}

TEST(PolynomialJson, RejectsMalformedInput) {
  for (const char* bad : {R"([1,2])", R"({"coeff":[]})", R"({"coeffs":["x"]})", R"({"coeffs":[1.5]})"}) {
    try {
      polynomial_from_json(nlohmann::json::parse(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::parse_error);
    }
  }
}
