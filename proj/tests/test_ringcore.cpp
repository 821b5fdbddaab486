#include <gtest/gtest.h>

#include <random>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

// Coefficient list of the Gaussian binomial in q, counted directly: the
// coefficient of q^k is the number of m-subsets of {0..n-1} whose element sum
// exceeds the minimum m(m-1)/2 by exactly k.
std::vector<long> gaussian_by_subsets(int n, int m) {
  std::vector<long> c(static_cast<std::size_t>(m * (n - m) + 1), 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int s = 0;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s += b;
    ++c[static_cast<std::size_t>(s - m * (m - 1) / 2)];
  }
  return c;
}

LaurentU random_poly(std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> coef(-5, 5), lo(-span, span);
  std::vector<BigInt> c;
  for (int i = 0; i < span; ++i) c.emplace_back(coef(rng));
  return LaurentU::from_coeffs(lo(rng), std::move(c));
}

}  // namespace

TEST(LaurentArithmetic, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    LaurentU a = random_poly(rng, 6), b = random_poly(rng, 5), c = random_poly(rng, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, LaurentU());
  }
}

TEST(LaurentArithmetic, ExactDivisionRecoversFactor) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    LaurentU a = random_poly(rng, 6), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    EXPECT_EQ((a * b).exact_div(b), a);
  }
}

TEST(LaurentArithmetic, InexactDivisionThrows) {
  EXPECT_THROW(q_pow(2).exact_div(q_pow(1) - LaurentU(1)), NonExactDivision);
  EXPECT_THROW(LaurentU(3).exact_div(LaurentU(2)), NonExactDivision);
  EXPECT_THROW(LaurentU(1).exact_div(LaurentU()), NonExactDivision);
}

TEST(LaurentArithmetic, ConjugationInvertsTheVariable) {
  EXPECT_EQ(u_pow(3).conj(), u_pow(-3));
  LaurentU p = q_pow(2) + LaurentU(5) - v_pow(-1);
  EXPECT_EQ(p.conj(), q_pow(-2) + LaurentU(5) - v_pow(1));
  EXPECT_EQ((p * p.conj()).conj(), p * p.conj());
}

TEST(LaurentArithmetic, QuarterPowerConversions) {
  QPoly p = QPoly::from_coeffs(-1, {BigInt(2), BigInt(0), BigInt(-1)});
  EXPECT_EQ(q_to_u(p), q_pow(-1) * LaurentU(2) - q_pow(1));
  EXPECT_EQ(u_to_q(q_to_u(p)), p);
  EXPECT_THROW(u_to_q(v_pow(1)), NotInQ);
}

TEST(LaurentArithmetic, CheckedFastPathReportsOverflow) {
  Checked64 big(std::int64_t(1) << 62);
  EXPECT_THROW(big + big, CoefficientOverflow);
  EXPECT_THROW(big * Checked64(4), CoefficientOverflow);
  EXPECT_EQ((Checked64(-7) / Checked64(-1)).value(), 7);
}

TEST(QuantumNumbers, SmallValues) {
  EXPECT_EQ(qc::qnum(3), v_pow(2) + LaurentU(1) + v_pow(-2));
  EXPECT_EQ(qc::qnum(-2), -(v_pow(1) + v_pow(-1)));
  EXPECT_EQ(qc::qnum(0), LaurentU());
  EXPECT_EQ(qc::qnum(5) * qc::qint_bal(1), qc::qint_bal(5));
  EXPECT_EQ(qc::qnum_q(4), LaurentU(1) + q_pow(1) + q_pow(2) + q_pow(3));
}

TEST(QuantumNumbers, PochhammerExpansion) {
  // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
  LaurentU expected = LaurentU(1) - q_pow(1) - q_pow(2) + q_pow(4) + q_pow(5) - q_pow(6);
  EXPECT_EQ(qc::pochhammer(3), expected);
  EXPECT_EQ(qc::pochhammer(0), LaurentU(1));
}

TEST(QuantumNumbers, GaussianBinomialMatchesSubsetCount) {
  for (int n = 0; n <= 9; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto oracle = gaussian_by_subsets(n, m);
      std::vector<BigInt> c;
      for (long x : oracle) c.emplace_back(x);
      EXPECT_EQ(qc::qbinom_q(n, m), q_to_u(QPoly::from_coeffs(0, c))) << n << " choose " << m;
    }
}

TEST(QuantumNumbers, GaussianBinomialVanishesAboveTop) {
  EXPECT_EQ(qc::qbinom_q(3, 5), LaurentU());
  EXPECT_EQ(qc::qbinom_q(4, -1), LaurentU());
}

TEST(QuantumNumbers, NegativeUpperIndex) {
  // [-1 choose n]_q = (-1)^n q^{-n(n+1)/2}
  for (int n = 0; n <= 5; ++n) {
    LaurentU expected = q_pow(-n * (n + 1) / 2);
    if (n % 2) expected = -expected;
    EXPECT_EQ(qc::qbinom_q(-1, n), expected) << n;
  }
}

TEST(QuantumNumbers, BalancedBinomialIsSymmetric) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      LaurentU b = qc::qbinom_bal(n, m);
      EXPECT_EQ(b, b.conj());
      EXPECT_EQ(b * qc::qfact_bal(m) * qc::qfact_bal(n - m), qc::qfact_bal(n));
    }
}

TEST(QuantumNumbers, MultinomialAgreesWithFactorials) {
  LaurentU m = qc::multinomial_q({2, 1, 3});
  EXPECT_EQ(m * qc::qfact_q(2) * qc::qfact_q(1) * qc::qfact_q(3), qc::qfact_q(6));
}

TEST(Cyclotomic, KnownPolynomials) {
  auto x = [](int e) { return LaurentU::x_pow(e); };
  EXPECT_EQ(cyclotomic(1), x(1) - LaurentU(1));
  EXPECT_EQ(cyclotomic(6), x(2) - x(1) + LaurentU(1));
  EXPECT_EQ(cyclotomic(12), x(4) - x(2) + LaurentU(1));
  EXPECT_EQ(cyclotomic(8), x(4) + LaurentU(1));
}

TEST(Cyclotomic, ProductOverDivisorsAndDegree) {
  for (int n = 1; n <= 40; ++n) {
    LaurentU prod(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, LaurentU::x_pow(n) - LaurentU(1)) << n;
    EXPECT_EQ(cyclotomic(n).max_exp(), euler_phi(n)) << n;
  }
  EXPECT_THROW(cyclotomic(0), DomainError);
}

TEST(ModularReduction, InverseOfVariable) {
  // q^3 = 1 mod Phi_3, so q^-1 = q^2 = -1 - q.
  ModPoly r = reduce_mod(q_pow(-1), cyclotomic(3), BaseRing::Q());
  ASSERT_EQ(r.coeffs().size(), 2u);
  EXPECT_EQ(r.coeff(0), -1);
  EXPECT_EQ(r.coeff(1), -1);
}

TEST(ModularReduction, RootOfUnityPeriodicity) {
  for (int n = 2; n <= 12; ++n) {
    ModPoly a = reduce_mod(q_pow(n), cyclotomic(n), BaseRing::Z());
    EXPECT_EQ(a, a.constant(1)) << n;
  }
}

TEST(ModularReduction, PrimeFieldInverse) {
  ModPoly a = reduce_mod(q_pow(1) + LaurentU(2), cyclotomic(5), BaseRing::Fp(BigInt(7)));
  EXPECT_EQ(a * a.inverse(), a.constant(1));
  EXPECT_THROW(reduce_mod(q_pow(-1), LaurentU::x_pow(2) + LaurentU(2), BaseRing::Z()), NonInvertibleVariable);
}

TEST(Fractions, CancellationAndEquality) {
  LaurentFrac f(q_pow(1) - LaurentU(1), q_pow(2) - LaurentU(1));
  EXPECT_EQ(f * LaurentFrac(q_pow(1) + LaurentU(1)), LaurentFrac(1));
  EXPECT_TRUE((f * LaurentFrac(q_pow(2) - LaurentU(1))).is_laurent());
  EXPECT_EQ(f - f, LaurentFrac());
}

TEST(TextFormat, RoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    LaurentU p = random_poly(rng, 7);
    EXPECT_EQ(parse_laurent(to_string(p)), p) << to_string(p);
  }
  EXPECT_EQ(to_string(q_pow(2) - LaurentU(3)), "q^2 - 3");
  EXPECT_EQ(parse_laurent("v^3 + v^-1"), v_pow(3) + v_pow(-1));
}

TEST(TextFormat, FractionRoundTrip) {
  LaurentFrac f(v_pow(1) + LaurentU(2), q_pow(1) - LaurentU(1));
  EXPECT_EQ(parse_frac(to_string(f)), f);
}

TEST(TextFormat, MalformedInputThrows) {
  EXPECT_THROW(parse_laurent("q^"), InputError);
  EXPECT_THROW(parse_laurent("3 + z"), InputError);
}
