#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fete/lu.hpp"
#include "fete/oracles.hpp"
#include "support/reference.hpp"

namespace {

using fete::Complex;
using fete::ComplexMatrix;
using fete::RealMatrix;

TEST(TaylorSquaring, ZeroIsIdentity) {
  EXPECT_EQ(fete::expm_taylor_squaring(ComplexMatrix::zeros(3, 3)), ComplexMatrix::identity(3));
}

TEST(TaylorSquaring, Diagonal) {
  const auto r = fete::expm_taylor_squaring(RealMatrix{{1, 0}, {0, 2}});
  EXPECT_NEAR(r(0, 0).real(), std::exp(1.0), 1e-15 * std::exp(1.0));
  EXPECT_NEAR(r(1, 1).real(), std::exp(2.0), 1e-15 * std::exp(2.0));
  EXPECT_EQ(r(0, 1), Complex(0.0));
  EXPECT_EQ(r(1, 0), Complex(0.0));
}

TEST(TaylorSquaring, DiagonalFamily) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    RealMatrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = u(rng);
    const auto r = fete::expm_taylor_squaring(d);
    for (std::size_t i = 0; i < 3; ++i) {
      const double want = std::exp(d(i, i));
      // relative: entries reach e^5
      EXPECT_NEAR(r(i, i).real(), want, 1e-15 * want) << d(i, i);
    }
  }
}

TEST(TaylorSquaring, RotationMatchesClosedForm) {
  EXPECT_LE(fete::max_abs_diff(fete::expm_taylor_squaring(fete::test_matrices::m2()), fete::exact_m2()), 1e-15);
}

TEST(TaylorSquaring, AgreesWithClosedFormM1) {
  EXPECT_LE(fete::max_abs_diff(fete::expm_taylor_squaring(fete::test_matrices::m1()), fete::exact_m1()), 1e-14);
}

TEST(TaylorSquaring, Errors) {
  EXPECT_THROW(fete::expm_taylor_squaring(ComplexMatrix(2, 3)), fete::DimensionError);
  EXPECT_THROW(fete::expm_taylor_squaring(RealMatrix{{800.0}}), fete::NonFiniteError);
}

TEST(ExactM1, PrintedDigits) {
  const auto m = fete::exact_m1();
  // printed to 16 places: half a unit in the last place plus one ulp
  EXPECT_NEAR(m(0, 0).real(), -0.7357588823012208, 5e-17 + 1.2e-16);
  EXPECT_NEAR(m(0, 1).real(), 0.5518191617363316, 5e-17 + 1.2e-16);
  EXPECT_NEAR(m(1, 0).real(), -1.4715177646302175, 5e-17 + 2.3e-16);
  EXPECT_NEAR(m(1, 1).real(), 1.1036383234865511, 5e-17 + 2.3e-16);
}

TEST(ExactM1, SimilarityForm) {
  const RealMatrix v{{1, 3}, {2, 4}};
  const RealMatrix v_inv{{-2, 1.5}, {1, -0.5}};
  EXPECT_EQ(fete::mat_mul(v, v_inv), RealMatrix::identity(2));
  // the similarity reproduces the matrix itself
  const RealMatrix lambda{{-1, 0}, {0, -25}};
  EXPECT_EQ(fete::mat_mul(fete::mat_mul(v, lambda), v_inv), fete::test_matrices::m1());

  const RealMatrix exp_lambda{{std::exp(-1.0), 0}, {0, std::exp(-25.0)}};
  const auto via_similarity = fete::to_complex(fete::mat_mul(fete::mat_mul(v, exp_lambda), v_inv));
  EXPECT_LE(fete::max_abs_diff(via_similarity, fete::exact_m1()), 1e-14);
}

TEST(ExactM2, PrintedDigits) {
  const auto m = fete::exact_m2();
  EXPECT_NEAR(m(0, 0).real(), 0.5403023058681398, 1e-16);
  EXPECT_NEAR(m(1, 0).real(), 0.8414709848078965, 1e-16);
  EXPECT_NEAR(m(0, 1).real(), -0.8414709848078965, 1e-16);
}

TEST(ExactM2, Orthogonal) {
  const auto m = fete::exact_m2();
  EXPECT_LE(fete::max_abs_diff(fete::mat_mul(m.transpose(), m), ComplexMatrix::identity(2)), 1e-15);
}

TEST(Oracles, MethodTags) {
  EXPECT_EQ(fete::oracle_m1().method, fete::OracleMethod::exact_m1);
  EXPECT_EQ(fete::oracle_m2().method, fete::OracleMethod::exact_m2);
  EXPECT_EQ(fete::oracle_unit2().method, fete::OracleMethod::exact_identity);
  EXPECT_STREQ(fete::to_string(fete::oracle_taylor(ComplexMatrix::identity(2)).method), "taylor_squaring");
  EXPECT_NEAR(fete::oracle_unit2().value(1, 1).real(), std::exp(1.0), 0.0);
}

TEST(TaylorSquaring, ComplexInverseProperty) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = fete::testing::random_unit_disk(4, rng);
    const auto prod = fete::mat_mul(fete::expm_taylor_squaring(a), fete::expm_taylor_squaring(-a));
    EXPECT_LE(fete::max_abs_diff(prod, ComplexMatrix::identity(4)), 1e-13);
  }
}

}  // namespace
