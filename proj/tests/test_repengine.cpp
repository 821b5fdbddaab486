#include <gtest/gtest.h>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

SparseMatrix eye(int n) { return SparseMatrix::identity(n); }

// (id (x) qtr)(M) for M acting on V_n (x) V_n.
SparseMatrix partial_qtrace(int n, const SparseMatrix& M) {
  const int d = n + 1;
  SparseMatrix P(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      LaurentU s;
      for (int k = 0; k < d; ++k) s += v_pow(-(n - 2 * k)) * M.at(i * d + k, j * d + k);
      P.set(i, j, s);
    }
  return P;
}

}  // namespace

TEST(Irreps, KConjugatesGenerators) {
  for (int n = 0; n <= 5; ++n) {
    auto a = irrep(n);
    EXPECT_EQ(a.K * a.K_inv, eye(n + 1));
    EXPECT_EQ(a.K * a.e[1] * a.K_inv, a.e[1].scaled(v_pow(2))) << n;
    EXPECT_EQ(a.K * a.F[1] * a.K_inv, a.F[1].scaled(v_pow(-2))) << n;
  }
}

TEST(Irreps, PowersAndNilpotency) {
  for (int n = 0; n <= 5; ++n) {
    auto a = irrep(n);
    EXPECT_EQ(a.e[0], eye(n + 1));
    EXPECT_EQ(a.F[0], eye(n + 1));
    if (n >= 1) {
      EXPECT_EQ(a.e[1] * a.e[1], a.e[2]) << n;
    }
    EXPECT_TRUE(a.e[static_cast<std::size_t>(n + 1)].entries().empty());
    EXPECT_TRUE(a.F[static_cast<std::size_t>(n + 1)].entries().empty());
  }
}

TEST(Irreps, DividedPowerProduct) {
  // (F K)^2 = q^{-1} F^2 K^2, so F~ F~ = (1 + q^{-1}) F~^{(2)}
  for (int n = 2; n <= 5; ++n) {
    auto a = irrep(n);
    EXPECT_EQ(a.F[1] * a.F[1], a.F[2].scaled(LaurentU(1) + q_pow(-1))) << n;
  }
}

TEST(Irreps, NegativeWeightRejected) { EXPECT_THROW(irrep(-1), DomainError); }

TEST(Braiding, InverseIsTwoSided) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      SparseMatrix psi = braiding(m, n, 1), psi_inv = braiding(n, m, -1);
      EXPECT_EQ(psi_inv * psi, eye((m + 1) * (n + 1))) << m << "," << n;
      EXPECT_EQ(psi * psi_inv, eye((m + 1) * (n + 1))) << m << "," << n;
    }
}

TEST(Braiding, YangBaxterWithMixedColors) {
  const int cases[][3] = {{1, 1, 1}, {1, 2, 1}, {2, 1, 3}, {0, 2, 1}, {2, 2, 2}};
  for (const auto& c : cases) {
    const int a = c[0], b = c[1], d = c[2];
    const int da = a + 1, db = b + 1, dd = d + 1;
    SparseMatrix lhs = kron(braiding(b, d, 1), eye(da)) * kron(eye(db), braiding(a, d, 1)) * kron(braiding(a, b, 1), eye(dd));
    SparseMatrix rhs = kron(eye(dd), braiding(a, b, 1)) * kron(braiding(a, d, 1), eye(db)) * kron(eye(da), braiding(b, d, 1));
    EXPECT_EQ(lhs, rhs) << a << b << d;
  }
}

TEST(Braiding, PartialTraceIsTheTwist) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(partial_qtrace(n, braiding(n, n, 1)), eye(n + 1).scaled(twist_eigen(n, 1))) << n;
    EXPECT_EQ(partial_qtrace(n, braiding(n, n, -1)), eye(n + 1).scaled(twist_eigen(n, -1))) << n;
  }
}

TEST(Braiding, FundamentalEigenvalues) {
  // psi on V_1 (x) V_1 satisfies (psi - q^{1/4})(psi + q^{-3/4}) = 0.
  SparseMatrix psi = braiding(1, 1, 1);
  SparseMatrix lhs = (psi + eye(4).scaled(-u_pow(1))) * (psi + eye(4).scaled(u_pow(-3)));
  EXPECT_TRUE(lhs.entries().empty());
}

TEST(QuantumTrace, DimensionsAreQuantumIntegers) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qtrace(n, eye(n + 1)), qc::qnum(n + 1)) << n;
  EXPECT_THROW(qtrace(2, eye(2)), ShapeMismatch);
}

TEST(QuantumTrace, TwistPowers) {
  EXPECT_EQ(twist_eigen(1, 1), u_pow(3));
  EXPECT_EQ(twist_eigen(2, -2), q_pow(-4));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(twist_eigen(n, 1) * twist_eigen(n, -1), LaurentU(1));
}
