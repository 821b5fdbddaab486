#include <gtest/gtest.h>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

using Terms = std::map<int, LaurentFrac>;

// Clebsch-Gordan product of V-combinations, written out independently.
Terms cg(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [m, c] : a)
    for (const auto& [n, d] : b)
      for (int k = std::abs(m - n); k <= m + n; k += 2) r[k] += c * d;
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

// P_n = prod_{i=0}^{n-1} (V_1 - v^{2i+1} - v^{-2i-1}) in the V basis.
Terms p_by_product(int n) {
  Terms acc{{0, LaurentFrac(1)}};
  for (int i = 0; i < n; ++i) {
    Terms f{{1, LaurentFrac(1)}, {0, LaurentFrac(-(v_pow(2 * i + 1) + v_pow(-2 * i - 1)))}};
    acc = cg(acc, f);
  }
  return acc;
}

Terms nonzero(const BasisCombo& x) {
  Terms t;
  for (const auto& [k, c] : x.terms)
    if (!c.is_zero()) t[k] = c;
  return t;
}

BasisCombo sample_combo(Basis b) {
  BasisCombo x(b);
  x.add(0, LaurentFrac(q_pow(1)));
  x.add(1, LaurentFrac(LaurentU(2) - v_pow(3)));
  x.add(3, LaurentFrac(LaurentU(1), qc::qint_bal(1)));
  return x;
}

}  // namespace

TEST(BasisNames, RoundTrip) {
  for (Basis b : {Basis::V, Basis::P, Basis::Pp, Basis::Ppp, Basis::tPp, Basis::S})
    EXPECT_EQ(basis_from_name(basis_name(b)), b);
  EXPECT_THROW(basis_from_name("W"), InputError);
}

TEST(BasisChange, PBasisMatchesDefiningProduct) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(nonzero(to_V(BasisCombo::single(Basis::P, n))), p_by_product(n)) << n;
}

TEST(BasisChange, SmallPrimeElement) {
  // P'_1 = (V_1 - (v + v^{-1}) V_0) / (v - v^{-1})
  BasisCombo v = to_V(BasisCombo::single(Basis::Pp, 1));
  const LaurentFrac d(qc::qint_bal(1));
  EXPECT_EQ(v.coeff(1), LaurentFrac(1) / d);
  EXPECT_EQ(v.coeff(0), LaurentFrac(-(v_pow(1) + v_pow(-1))) / d);
}

TEST(BasisChange, RoundTripsThroughEveryBasis) {
  for (Basis from : {Basis::V, Basis::P, Basis::Pp, Basis::Ppp, Basis::tPp}) {
    const BasisCombo x = sample_combo(from);
    for (Basis to : {Basis::V, Basis::P, Basis::Pp, Basis::Ppp, Basis::tPp})
      EXPECT_EQ(nonzero(change_basis(change_basis(x, to), from)), nonzero(x)) << basis_name(from) << "->" << basis_name(to);
  }
}

TEST(BasisChange, EvenPartThroughS) {
  BasisCombo x(Basis::V);
  x.add(0, LaurentFrac(3));
  x.add(2, LaurentFrac(q_pow(-1)));
  x.add(6, LaurentFrac(v_pow(1) + v_pow(-1)));
  BasisCombo s = change_basis(x, Basis::S);
  EXPECT_EQ(nonzero(to_V(s)), nonzero(x));
  EXPECT_THROW(change_basis(BasisCombo::single(Basis::V, 3), Basis::S), DomainError);
}

TEST(BasisChange, SBasisDefiningProduct) {
  // S_1 = V_1^2 - (v + v^{-1})^2 = V_2 + V_0 - (v + v^{-1})^2 V_0
  const LaurentU t = v_pow(1) + v_pow(-1);
  Terms expected{{2, LaurentFrac(1)}, {0, LaurentFrac(LaurentU(1) - t * t)}};
  EXPECT_EQ(nonzero(to_V(BasisCombo::single(Basis::S, 1))), expected);
}

TEST(HopfPairing, GoldenOnVBasis) {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      EXPECT_EQ(pairing(BasisCombo::single(Basis::V, m), BasisCombo::single(Basis::V, n)), LaurentFrac(qc::qnum((m + 1) * (n + 1))));
}

TEST(HopfPairing, ClosedFormsAgreeWithBilinearExpansion) {
  for (Basis b : {Basis::P, Basis::Pp, Basis::Ppp, Basis::tPp})
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        const BasisCombo x = BasisCombo::single(b, m);
        for (const BasisCombo& y : {BasisCombo::single(Basis::S, n), BasisCombo::single(Basis::V, 2 * n)})
          EXPECT_EQ(pairing(x, y), pairing_bilinear(x, y)) << basis_name(b) << m << " with " << basis_name(y.basis) << n;
      }
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n) {
      const BasisCombo x = BasisCombo::single(Basis::V, m), y = BasisCombo::single(Basis::S, n);
      EXPECT_EQ(pairing(x, y), pairing_bilinear(x, y));
      EXPECT_EQ(pairing(y, x), pairing_bilinear(x, y));
    }
}

TEST(HopfPairing, PrimeAndSAreOrthogonal) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      LaurentFrac p = pairing(BasisCombo::single(Basis::Pp, m), BasisCombo::single(Basis::S, n));
      if (m != n) {
        EXPECT_TRUE(p.is_zero()) << m << "," << n;
      } else {
        EXPECT_FALSE(p.is_zero());
      }
    }
}

TEST(PrimeProduct, SmallProduct) {
  // P'_1 P'_1 = [2] P'_2 + {2} P'_1
  BasisCombo p = pprime_mul(1, 1);
  EXPECT_EQ(p.coeff(2), LaurentFrac(qc::qnum(2)));
  EXPECT_EQ(p.coeff(1), LaurentFrac(qc::qint_bal(2)));
  EXPECT_TRUE(p.coeff(0).is_zero());
}

TEST(PrimeProduct, AgreesWithClebschGordan) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      Terms lhs = cg(nonzero(to_V(BasisCombo::single(Basis::Pp, m))), nonzero(to_V(BasisCombo::single(Basis::Pp, n))));
      EXPECT_EQ(nonzero(to_V(pprime_mul(m, n))), lhs) << m << "," << n;
    }
}

TEST(TwistElement, InverseElements) {
  const int N = 7;
  EXPECT_EQ(nonzero(pprime_product(omega_truncated(1, N), omega_truncated(-1, N), N)), nonzero(BasisCombo::single(Basis::Pp, 0)));
  EXPECT_EQ(nonzero(pprime_product(omega_truncated(1, N), omega_truncated(1, N), N)), nonzero(omega_truncated(2, N)));
  EXPECT_EQ(nonzero(omega_truncated(0, N)), nonzero(BasisCombo::single(Basis::Pp, 0)));
}

TEST(TwistElement, PairingWithEvenColorsIsTheTwist) {
  for (int p : {1, -1, 2, -2})
    for (int m = 0; m <= 3; ++m) {
      const int n = 2 * m;
      EXPECT_EQ(pairing(omega_truncated(p, m + 1), BasisCombo::single(Basis::V, n)), LaurentFrac(twist_eigen(n, p) * qc::qnum(n + 1)))
          << "p = " << p << ", n = " << n;
    }
}

TEST(TwistElement, LowCoefficients) {
  EXPECT_EQ(omega_coeff(1, 0), LaurentU(1));
  EXPECT_EQ(omega_coeff(-1, 0), LaurentU(1));
  EXPECT_EQ(omega_coeff(1, 1), v_pow(2));
  EXPECT_EQ(omega_coeff(-1, 1), -v_pow(-2));
  EXPECT_THROW(omega_coeff(1, -1), DomainError);
}

TEST(RootElement, Definition) {
  BasisCombo o = Omega_r(5);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(o.coeff(i), LaurentFrac(qc::qnum(i + 1)));
  EXPECT_TRUE(o.coeff(4).is_zero());
}

TEST(ComboArithmetic, LinearOperations) {
  BasisCombo a = sample_combo(Basis::V), b = BasisCombo::single(Basis::V, 1, LaurentFrac(5));
  EXPECT_EQ(nonzero(a + b - b), nonzero(a));
  EXPECT_EQ(nonzero(a.scaled(LaurentFrac(2))), nonzero(a + a));
}
