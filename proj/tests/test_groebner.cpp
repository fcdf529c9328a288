#include <gtest/gtest.h>

#include <random>

#include "conifold/groebner.hpp"
#include "conifold/polynomial.hpp"
#include "support.hpp"

using namespace conifold;

namespace {

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, int zeta_order = 1) {
  ParseOptions opts;
  opts.zeta_order = zeta_order;
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, opts));
  return out;
}

// Brute-force count of standard monomials of degree d.
long long standard_monomials(const std::vector<Exponents>& lead, int nvars, int degree) {
  long long count = 0;
  Exponents e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      bool standard = std::none_of(lead.begin(), lead.end(), [&](const Exponents& m) {
        for (int i = 0; i < nvars; ++i) {
          if (m[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)]) return false;
        }
        return true;
      });
      count += standard;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, degree);
  return count;
}

}  // namespace

TEST(Hilbert, CompleteIntersectionOfPowers) {
  // k[x,y]/(x^2, y^3): N(t) = (1 - t^2)(1 - t^3).
  auto n = hilbert_numerator({{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(n, (std::vector<long long>{1, 0, -1, -1, 0, 1}));
  auto h = summarize_hilbert({{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(h.krull_dimension, 0);
  EXPECT_EQ(h.degree, 6);
}

TEST(Hilbert, UnitAndZeroIdeals) {
  EXPECT_EQ(summarize_hilbert({{0, 0, 0}}, 3).krull_dimension, -1);
  auto h = summarize_hilbert({}, 3);
  EXPECT_EQ(h.krull_dimension, 3);
  EXPECT_EQ(h.degree, 1);
}

TEST(Hilbert, NumeratorMatchesBruteForceCounts) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int nvars = 2 + trial % 3;
    std::vector<Exponents> monos;
    std::uniform_int_distribution<int> exp(0, 3);
    for (int k = 0; k < 4; ++k) {
      Exponents e(static_cast<std::size_t>(nvars));
      for (auto& v : e) v = exp(rng);
      monos.push_back(e);
    }
    auto num = hilbert_numerator(monos, static_cast<std::size_t>(nvars));
    // Series coefficients of N(t) / (1 - t)^nvars.
    std::vector<long long> series(12, 0);
    for (std::size_t i = 0; i < num.size() && i < series.size(); ++i) series[i] = num[i];
    for (int f = 0; f < nvars; ++f) {
      for (std::size_t i = 1; i < series.size(); ++i) series[i] += series[i - 1];
    }
    for (int d = 0; d < 12; ++d) {
      EXPECT_EQ(series[static_cast<std::size_t>(d)], standard_monomials(monos, nvars, d)) << "degree " << d;
    }
  }
}

TEST(Groebner, FermatGradientIsZeroDimensional) {
  auto lead = leading_monomial_ideal(parse_all({"5*s0^4", "5*s1^4", "5*s2^4", "5*s3^4", "5*s4^4"}));
  ASSERT_TRUE(lead);
  auto h = summarize_hilbert(*lead, 5);
  EXPECT_EQ(h.krull_dimension, 0);
  EXPECT_EQ(h.degree, 1024);
}

TEST(Groebner, TwistedCubicHasDegreeThree) {
  // Ideal of the twisted cubic in P^3 (as s0..s3, s4 free): degree 3 curve.
  auto gens = parse_all({"s0*s2 - s1^2", "s1*s3 - s2^2", "s0*s3 - s1*s2", "s4"});
  auto lead = leading_monomial_ideal(gens);
  ASSERT_TRUE(lead);
  auto h = summarize_hilbert(*lead, 5);
  EXPECT_EQ(h.krull_dimension, 2);
  EXPECT_EQ(h.degree, 3);
}

TEST(Groebner, FinitePointSetDegreeCountsPoints) {
  // Three points of P^1 in s0, s1 plus s2 = s3 = s4 = 0.
  auto gens = parse_all({"s0^3 + s0^2*s1 - 2*s0*s1^2", "s2", "s3", "s4"});
  auto h = summarize_hilbert(*leading_monomial_ideal(gens), 5);
  EXPECT_EQ(h.krull_dimension, 1);
  EXPECT_EQ(h.degree, 3);
}

TEST(Groebner, CyclotomicCoefficients) {
  auto gens = parse_all({"s0 - zeta*s1", "s1^5 - s2^5", "s3", "s4"}, 5);
  auto h = summarize_hilbert(*leading_monomial_ideal(gens), 5);
  EXPECT_EQ(h.krull_dimension, 1);
  EXPECT_EQ(h.degree, 5);
}

TEST(Groebner, BudgetExhaustionIsReported) {
  GroebnerBudget tiny{1, 5000};
  auto gens = parse_all({"s0*s2 - s1^2", "s1*s3 - s2^2", "s0*s3 - s1*s2"});
  EXPECT_FALSE(leading_monomial_ideal(gens, tiny).has_value());
}

TEST(Modular, PrimesAreCongruentToOne) {
  for (int k : {1, 3, 5, 12}) {
    std::uint64_t a = certificate_prime(k, 0);
    std::uint64_t b = certificate_prime(k, 1);
    EXPECT_GT(a, b);
    EXPECT_EQ((a - 1) % static_cast<std::uint64_t>(k), 0U);
    EXPECT_EQ((b - 1) % static_cast<std::uint64_t>(k), 0U);
    for (std::uint64_t d = 2; d * d <= a; d += (d == 2 ? 1 : 2)) ASSERT_NE(a % d, 0U);
  }
}

// Over a lucky prime the leading ideal agrees with the one over Q; the
// Hilbert function can only grow under reduction.
TEST(Modular, AgreesWithRationalComputation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial g = testing_support::random_homogeneous(rng, 3, 6, CyclotomicField::rationals());
    if (g.is_zero()) continue;
    auto grad = gradient(g);
    std::vector<Polynomial> gens;
    for (auto& d : grad) {
      if (!d.is_zero()) gens.push_back(d);
    }
    auto exact = leading_monomial_ideal(gens);
    auto modular = leading_monomial_ideal_mod_p(gens, certificate_prime(1, 0));
    ASSERT_TRUE(exact && modular);
    auto he = summarize_hilbert(*exact, 5);
    auto hm = summarize_hilbert(*modular, 5);
    EXPECT_GE(hm.krull_dimension, he.krull_dimension);
    for (int d = 0; d < 8; ++d) {
      EXPECT_GE(standard_monomials(*modular, 5, d), standard_monomials(*exact, 5, d));
    }
  }
}

TEST(Modular, DenominatorDivisibleByPrimeIsRejected) {
  const std::uint64_t p = certificate_prime(1, 0);
  auto gens = parse_all({"1/" + std::to_string(p) + "*s0 + s1"});
  EXPECT_FALSE(leading_monomial_ideal_mod_p(gens, p).has_value());
}
