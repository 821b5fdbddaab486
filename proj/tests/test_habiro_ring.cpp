#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

using cplx = std::complex<double>;

QPoly qp(std::initializer_list<long> c, int lo = 0) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return QPoly::from_coeffs(lo, std::move(v));
}

HabiroElem random_elem(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> coef(-3, 3), lo(-2, 2);
  std::vector<QPoly> t;
  for (int n = 0; n < depth; ++n) t.push_back(qp({coef(rng), coef(rng), coef(rng)}, lo(rng)));
  return HabiroElem(depth, std::move(t));
}

// The cyclotomic expansion sum_n (q)_n, whose value at every root of unity
// is a finite sum.
HabiroElem pochhammer_sum(int depth) { return HabiroElem(depth, std::vector<QPoly>(static_cast<std::size_t>(depth), QPoly(1))); }

cplx eval_complex(const QPoly& p, cplx z) {
  cplx s = 0;
  for (int e = p.min_exp(); e <= p.max_exp() && !p.is_zero(); ++e) s += p.coeff(e).get_d() * std::pow(z, e);
  return s;
}

cplx eval_complex(const ModPoly& m, cplx z) {
  cplx s = 0;
  for (std::size_t i = 0; i < m.coeffs().size(); ++i) s += m.coeffs()[i].get_d() * std::pow(z, static_cast<int>(i));
  return s;
}

cplx root(int r) { return std::polar(1.0, 2 * M_PI / r); }

}  // namespace

TEST(HabiroRing, ProductIsCompatibleWithTruncation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    HabiroElem a = random_elem(rng, 6), b = random_elem(rng, 6);
    for (int d = 1; d <= 6; ++d) {
      QPoly lhs = reduce(a * b, d);
      QPoly rhs = reduce(HabiroElem::constant(reduce(a, d) * reduce(b, d), d), d);
      EXPECT_EQ(lhs, rhs) << "depth " << d;
    }
  }
}

TEST(HabiroRing, RingIdentities) {
  std::mt19937 rng(9);
  HabiroElem a = random_elem(rng, 5), b = random_elem(rng, 5), c = random_elem(rng, 5);
  EXPECT_TRUE(equals_at_depth(a * (b + c), a * b + a * c, 5));
  EXPECT_TRUE(equals_at_depth(a * b, b * a, 5));
  EXPECT_TRUE(equals_at_depth(a * HabiroElem::one(5), a, 5));
}

TEST(HabiroRing, CanonicalReductionShape) {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    HabiroElem a = random_elem(rng, 5);
    for (int d = 1; d <= 5; ++d) {
      QPoly r = reduce(a, d);
      if (r.is_zero()) continue;
      EXPECT_GE(r.min_exp(), 0);
      EXPECT_LT(r.max_exp(), d * (d + 1) / 2);
      EXPECT_TRUE(equals_at_depth(a, HabiroElem::constant(r, d), d));
    }
  }
}

TEST(HabiroRing, InverseOfQModuloPochhammer) {
  QPoly inv = reduce(HabiroElem::constant(QPoly::x_pow(-1), 4), 4);
  EXPECT_TRUE(equals_at_depth(HabiroElem::constant(inv * QPoly::x_pow(1), 4), HabiroElem::one(4), 4));
}

TEST(HabiroRing, ReductionIsStableUnderTruncation) {
  HabiroElem x = pochhammer_sum(12);
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(reduce(x, d), reduce(x.truncated(d), d));
}

TEST(HabiroRing, RootValuesAgreeWithComplexEvaluation) {
  HabiroElem x = pochhammer_sum(16);
  for (int r = 1; r <= 16; ++r) {
    cplx z = root(r), direct = 0, prod = 1;
    for (int n = 0; n < r; ++n) {
      direct += prod;
      prod *= 1.0 - std::pow(z, n + 1);
    }
    EXPECT_LT(std::abs(eval_complex(eval_root(x, r), z) - direct), 1e-8) << "r = " << r;
  }
}

TEST(HabiroRing, RootValuesOfPochhammerSum) {
  // sum_n (q)_n at q = 1 and q = -1
  EXPECT_EQ(eval_root(pochhammer_sum(4), 1).coeff(0), 1);
  EXPECT_EQ(eval_root(pochhammer_sum(4), 2).coeff(0), 3);
}

TEST(HabiroRing, EvaluationIsAHomomorphism) {
  std::mt19937 rng(17);
  for (int r = 1; r <= 7; ++r) {
    HabiroElem a = random_elem(rng, 8), b = random_elem(rng, 8);
    EXPECT_EQ(eval_root(a * b, r), eval_root(a, r) * eval_root(b, r)) << r;
    EXPECT_EQ(eval_root(a + b, r), eval_root(a, r) + eval_root(b, r)) << r;
  }
}

TEST(HabiroRing, EvaluationNeedsDepth) { EXPECT_THROW(eval_root(pochhammer_sum(3), 5), DepthExceeded); }

TEST(HabiroRing, TaylorOfMonomialAtOne) {
  // q^3 = (1 + (q-1))^3
  auto t = taylor(HabiroElem::constant(QPoly::x_pow(3), 5), 1, 5);
  const long expected[] = {1, 3, 3, 1, 0};
  for (int k = 0; k < 5; ++k) EXPECT_EQ(t[static_cast<std::size_t>(k)].coeff(0), expected[k]) << k;
}

TEST(HabiroRing, TaylorAgreesWithComplexDerivative) {
  // For f = sum (q)_n at zeta_5, the first coefficient is f(zeta) and the
  // second is f'(zeta); compare with a finite difference.
  HabiroElem x = pochhammer_sum(10);
  auto t = taylor(x, 5, 2);
  cplx z = root(5);
  QPoly p = x.partial_sum(10);
  const double h = 1e-6;
  cplx fd = (eval_complex(p, z + h) - eval_complex(p, z - h)) / (2 * h);
  EXPECT_LT(std::abs(eval_complex(t[0], z) - eval_complex(p, z)), 1e-8);
  EXPECT_LT(std::abs(eval_complex(t[1], z) - fd), 1e-4);
}

TEST(HabiroRing, PhiOrderCountsVanishingCoefficients) {
  HabiroElem x(12);
  x.term(0) = QPoly();
  x.term(3) = QPoly(1);  // (q)_3 vanishes to order one at q = 1 and at cube roots
  EXPECT_EQ(phi_order(x, 1, 4), 3);
  EXPECT_EQ(phi_order(x, 3, 4), 1);
  EXPECT_EQ(phi_order(x, 2, 4), 1);
  EXPECT_EQ(phi_order(x, 4, 3), 0);
}

TEST(HabiroRing, DerivativeOfPochhammerSymbol) {
  HabiroElem x(6);
  x.term(2) = QPoly(1);  // (1-q)(1-q^2), derivative -1 - 2q + 3q^2
  HabiroElem d = derivative(x);
  EXPECT_EQ(d.depth(), 3);
  EXPECT_TRUE(equals_at_depth(d, HabiroElem::constant(qp({-1, -2, 3}), 3), 3));
}

TEST(HabiroRing, DerivativeSatisfiesLeibniz) {
  std::mt19937 rng(21);
  HabiroElem a = random_elem(rng, 8), b = random_elem(rng, 8);
  EXPECT_TRUE(equals_at_depth(derivative(a * b), derivative(a) * b.truncated(4) + a.truncated(4) * derivative(b), 4));
}

TEST(HabiroRing, DepthMustBePositive) {
  EXPECT_THROW(HabiroElem(0), DomainError);
  EXPECT_THROW(reduce(HabiroElem::one(3), 0), DomainError);
}
