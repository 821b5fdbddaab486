#include <gtest/gtest.h>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

const HabiroElem& poincare() {
  static const HabiroElem x = poincare_series(40);
  return x;
}

BigInt md(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt pw(const BigInt& a, long e, const BigInt& m) {
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
  return r;
}

// The series sum_n q^n (1 - q^{n+1}) ... (1 - q^{2n+1}) / (1 - q), summed
// directly modulo m at q = alpha; requires 1 - alpha to be a unit.
BigInt explicit_series(const BigInt& alpha, const BigInt& m, int nmax) {
  BigInt inv;
  const BigInt one_minus = md(1 - alpha, m);
  if (mpz_invert(inv.get_mpz_t(), one_minus.get_mpz_t(), m.get_mpz_t()) == 0) throw std::runtime_error("1 - alpha not a unit");
  BigInt total = 0;
  for (int n = 0; n <= nmax; ++n) {
    BigInt t = pw(alpha, n, m);
    for (int j = n + 1; j <= 2 * n + 1; ++j) t = md(t * (1 - pw(alpha, j, m)), m);
    total = md(total + t * inv, m);
  }
  return total;
}

BigInt eval_poly_at(const ModPoly& f, const BigInt& alpha, const BigInt& p) {
  BigInt s = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const BigRat& c = f.coeffs()[i];
    BigInt dinv;
    const BigInt den = md(c.get_den(), p);
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    s = md(s + c.get_num() * dinv * pw(alpha, static_cast<long>(i), p), p);
  }
  return s;
}

}  // namespace

TEST(RationalEvaluation, AgreesWithExplicitSeries) {
  const struct {
    long a, b, m;
  } cases[] = {{2, 1, 5}, {3, 1, 7}, {2, 1, 9}, {2, 3, 35}, {5, 2, 27}, {3, 1, 16}};
  for (const auto& c : cases) {
    const BigInt m(c.m);
    BigInt binv;
    const BigInt bb(c.b);
    mpz_invert(binv.get_mpz_t(), bb.get_mpz_t(), m.get_mpz_t());
    const BigInt alpha = md(BigInt(c.a) * binv, m);
    if (md(1 - alpha, m) == 0) continue;
    BigInt g;
    const BigInt om = md(1 - alpha, m);
    mpz_gcd(g.get_mpz_t(), om.get_mpz_t(), m.get_mpz_t());
    if (g != 1) continue;
    const ResidueValue v = eval_rational(poincare(), BigInt(c.a), BigInt(c.b), m);
    EXPECT_EQ(v.residue, explicit_series(alpha, m, 60)) << c.a << "/" << c.b << " mod " << c.m;
  }
}

TEST(RationalEvaluation, FrozenValue) {
  const ResidueValue v = eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(5));
  EXPECT_EQ(v.residue, 4);
  EXPECT_EQ(v.terms_used, 4);
  EXPECT_EQ(to_string(v), "4 mod 5");
}

TEST(RationalEvaluation, InputValidation) {
  EXPECT_THROW(eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(6)), NotCoprime);
  EXPECT_THROW(eval_rational(poincare(), BigInt(3), BigInt(5), BigInt(10)), NotCoprime);
  EXPECT_THROW(eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(0)), DomainError);
  EXPECT_EQ(eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(1)).residue, 0);
  EXPECT_THROW(eval_rational(poincare_series(3), BigInt(2), BigInt(1), BigInt(11)), DepthExceeded);
}

TEST(PadicEvaluation, AgreesWithRationalAtPrimePowers) {
  for (int e = 1; e <= 3; ++e) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 5, static_cast<unsigned long>(e));
    EXPECT_EQ(eval_padic(poincare(), BigInt(2), BigInt(5), e).residue, eval_rational(poincare(), BigInt(2), BigInt(1), m).residue);
  }
}

TEST(PadicEvaluation, PrecisionsAreCoherent) {
  for (long s : {2L, 3L, 7L}) {
    const BigInt hi = eval_padic(poincare(), BigInt(s), BigInt(5), 3).residue;
    const BigInt lo = eval_padic(poincare(), BigInt(s), BigInt(5), 2).residue;
    EXPECT_EQ(md(hi, BigInt(25)), lo) << s;
  }
}

TEST(PadicEvaluation, AgreesWithExplicitSeries) {
  EXPECT_EQ(eval_padic(poincare(), BigInt(2), BigInt(3), 3).residue, explicit_series(BigInt(2), BigInt(27), 80));
}

TEST(PadicEvaluation, InputValidation) {
  EXPECT_THROW(eval_padic(poincare(), BigInt(10), BigInt(5), 2), NotAUnit);
  EXPECT_THROW(eval_padic(poincare(), BigInt(2), BigInt(6), 2), DomainError);
  EXPECT_THROW(eval_padic(poincare(), BigInt(2), BigInt(5), 0), DomainError);
}

TEST(RationalEvaluation, ChineseRemainderCoherence) {
  const BigInt r35 = eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(35)).residue;
  EXPECT_EQ(md(r35, BigInt(5)), eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(5)).residue);
  EXPECT_EQ(md(r35, BigInt(7)), eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(7)).residue);
}

TEST(ModpEvaluation, RootsInThePrimeField) {
  // 3 has order 5 modulo 11, and 2 has order 3 modulo 7.
  const ResidueValue v = modp_value(poincare(), BigInt(11), 5);
  EXPECT_EQ(eval_poly_at(v.poly, BigInt(3), BigInt(11)), eval_rational(poincare(), BigInt(3), BigInt(1), BigInt(11)).residue);
  const ResidueValue w = modp_value(poincare(), BigInt(7), 3);
  EXPECT_EQ(eval_poly_at(w.poly, BigInt(2), BigInt(7)), eval_rational(poincare(), BigInt(2), BigInt(1), BigInt(7)).residue);
}

TEST(ModpEvaluation, ReductionOfTheRootValue) {
  // the value over Q at r = 5 is q^3 + 2q^2 + 2q + 1
  const ResidueValue v = modp_value(poincare(), BigInt(3), 5);
  std::vector<BigRat> expected{BigRat(1), BigRat(2), BigRat(2), BigRat(1)};
  EXPECT_EQ(v.poly.coeffs(), expected);
  EXPECT_EQ(to_string(v), "q^3 + 2*q^2 + 2*q + 1 in F_3[q]/Phi_5");
}

TEST(ModpEvaluation, NonvanishingWitnesses) {
  // Norms of the root values: 1 at r = 5, 43 at r = 7, 49 at r = 8.
  for (long p : {2L, 3L, 7L, 11L, 13L}) EXPECT_TRUE(modp_nonvanishing(poincare(), BigInt(p), 5)) << p;
  EXPECT_FALSE(modp_nonvanishing(poincare(), BigInt(43), 7));
  EXPECT_TRUE(modp_nonvanishing(poincare(), BigInt(29), 7));
  EXPECT_FALSE(modp_nonvanishing(poincare(), BigInt(7), 8));
  EXPECT_TRUE(modp_nonvanishing(poincare(), BigInt(5), 8));
}

TEST(ModpEvaluation, InputValidation) {
  EXPECT_THROW(modp_value(poincare(), BigInt(5), 10), NotCoprime);
  EXPECT_THROW(modp_value(poincare(), BigInt(4), 3), DomainError);
  EXPECT_THROW(modp_value(poincare_series(4), BigInt(7), 5), DepthExceeded);
}

TEST(ModpEvaluation, ScanTable) {
  const std::string csv = modp_scan_csv(poincare(), {5, 43}, {5, 7});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "modulus-type,p,r,value,nonvanishing");
  EXPECT_NE(csv.find("modp,43,7,"), std::string::npos);
  EXPECT_NE(csv.find(",false\n"), std::string::npos);
  EXPECT_EQ(csv.find("modp,5,5,"), std::string::npos);  // p | r is skipped
}
