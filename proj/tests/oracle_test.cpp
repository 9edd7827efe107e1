#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rieszwell/closedform.hpp"
#include "rieszwell/oracle.hpp"
#include "rieszwell/specfun.hpp"

namespace {

using namespace rieszwell;
using std::numbers::pi;

TEST(StableKernel, SpecialPoints) {
  EXPECT_NEAR(oracle::stable_kernel_g(1.0), -pi / 4.0, 1e-15);
  EXPECT_NEAR(oracle::stable_kernel_g(0.0), -1.0, 1e-15);
  EXPECT_NEAR(oracle::stable_kernel_g(3.0), 0.0, 1e-15);
}

TEST(StableKernel, MatchesNaiveFormAwayFromPole) {
  for (double q = 0.0; q < 6.0; q += 0.0137) {
    if (std::abs(q - 1.0) <= 0.1) continue;
    const double naive = std::cos(0.5 * pi * q) / (q * q - 1.0);
    EXPECT_NEAR(oracle::stable_kernel_g(q), naive, 1e-12) << q;
  }
}

TEST(IDirect, ReferenceValues) {
  const FractionalOrder order(0.5);
  const WellConfig well;
  const QuadratureSettings cfg;
  EXPECT_NEAR(oracle::i_direct(order, well, 0.0, cfg).value, -2.75366343562012988, 1e-8);
  EXPECT_NEAR(oracle::i_direct(order, well, 1.0, cfg).value, 1.66156194974687969, 1e-8);
  EXPECT_NEAR(oracle::i_direct(order, well, 0.5, cfg).value, -1.74326415496475119, 1e-8);
}

TEST(IDirect, EvenInX) {
  const FractionalOrder order(-0.3);
  const WellConfig well;
  const QuadratureSettings cfg;
  for (double x : {0.2, 0.9, 1.3, 2.7}) {
    EXPECT_EQ(oracle::i_direct(order, well, x, cfg).value,
              oracle::i_direct(order, well, -x, cfg).value)
        << x;
  }
}

TEST(IDirect, ScalesWithWellWidth) {
  const FractionalOrder order(0.4);
  const QuadratureSettings cfg;
  WellConfig wide;
  wide.a = 2.5;
  EXPECT_NEAR(oracle::i_direct(order, wide, 1.25, cfg).value,
              oracle::i_direct(order, WellConfig{}, 0.5, cfg).value, 1e-10);
}

TEST(IDirect, ErrorEstimateCoversClosedForm) {
  const QuadratureSettings cfg;
  const WellConfig well;
  for (double alpha : {-0.8, -0.25, 0.3, 0.75}) {
    const FractionalOrder order(alpha);
    for (double x : {0.0, 0.45, 0.8, 1.6, 3.0}) {
      const auto closed = closedform::i_closed(order, well, x);
      const auto direct = oracle::i_direct(order, well, x, cfg);
      ASSERT_FALSE(closed.degraded);
      EXPECT_LE(std::abs(closed.value - direct.value), 10.0 * direct.err_estimate + 1e-13)
          << alpha << " " << x;
    }
  }
}

TEST(IDirect, StableUnderTighterTolerance) {
  const FractionalOrder order(0.6);
  const WellConfig well;
  QuadratureSettings loose;
  QuadratureSettings tight = loose;
  tight.rel_tol = loose.rel_tol / 2.0;
  for (double x : {0.1, 1.2}) {
    EXPECT_NEAR(oracle::i_direct(order, well, x, loose).value,
                oracle::i_direct(order, well, x, tight).value, 1e-8);
  }
}

TEST(IDirect, ExhaustedBudgetThrows) {
  QuadratureSettings cfg;
  cfg.max_panels = 3;
  cfg.rel_tol = 1e-14;
  cfg.abs_tol = 1e-16;
  EXPECT_THROW(oracle::i_direct(FractionalOrder(0.5), WellConfig{}, 0.3, cfg), ConvergenceError);
}

TEST(IDirect, RejectsBadInput) {
  const QuadratureSettings cfg;
  EXPECT_THROW(oracle::i_direct(FractionalOrder(0.5), WellConfig{}, std::nan(""), cfg),
               DomainError);
  EXPECT_THROW(oracle::i_direct(FractionalOrder(0.5), WellConfig{-1.0}, 0.0, cfg), DomainError);
}

TEST(FDirect, ReferenceValues) {
  const QuadratureSettings cfg;
  EXPECT_NEAR(oracle::f_direct(FractionalOrder(0.5), cfg).value, 0.830780974873439845, 1e-9);
  EXPECT_NEAR(oracle::f_direct(FractionalOrder(-0.5), cfg).value, -1.121504931219282518, 1e-9);
  EXPECT_NEAR(oracle::f_direct(FractionalOrder(0.25), cfg).value, 0.360385314975334477, 1e-9);
}

TEST(KDirect, ReferenceValues) {
  const QuadratureSettings cfg;
  const FractionalOrder order(0.5);
  EXPECT_NEAR(oracle::k_direct(order, 0.0, cfg).value, 0.5 * pi * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(oracle::k_direct(order, 1.0, cfg).value, 0.411562703081365732, 1e-9);
}

TEST(KDirect, LargeLambdaAsymptote) {
  const QuadratureSettings cfg;
  const double lead = specfun::gamma(1.5) / std::pow(50.0, 1.5);
  const double k = oracle::k_direct(FractionalOrder(0.5), 50.0, cfg).value;
  EXPECT_LE(k, lead);
  EXPECT_GE(k, 0.99 * lead);
}

TEST(KDirect, DecreasingInLambda) {
  const QuadratureSettings cfg;
  const FractionalOrder order(-0.4);
  double prev = oracle::k_direct(order, 0.0, cfg).value;
  for (double lambda : {0.05, 0.3, 1.0, 2.5, 7.0, 20.0}) {
    const double k = oracle::k_direct(order, lambda, cfg).value;
    EXPECT_LT(k, prev) << lambda;
    prev = k;
  }
}

TEST(KDirect, RejectsNegativeLambda) {
  EXPECT_THROW(oracle::k_direct(FractionalOrder(0.5), -1.0, QuadratureSettings{}), DomainError);
}

}  // namespace
