#include <random>

#include <gtest/gtest.h>

#include "lst/aa1.hpp"
#include "lst/aa2.hpp"
#include "lst/diagnostics/equivariance.hpp"
#include "lst/error.hpp"
#include "lst/oracle.hpp"
#include "reference.hpp"

namespace {

using lst::Coefficients;
using lst::Dataset;
using lst::FitReport;
using namespace lst::testing;

TEST(Oracle, LocationMajorityAtZero) {
  Eigen::VectorXd y(4);
  y << 0, 0, 0, 10;
  const FitReport r = lst::lst_oracle(Dataset(Eigen::MatrixXd(4, 0), y), 1.0);
  EXPECT_EQ(r.beta(0), 0.0);
  EXPECT_EQ(r.q, 0.0);
}

TEST(Oracle, PerfectLineRecovered) {
  std::mt19937_64 rng(51);
  Coefficients beta(2);
  beta << 0.5, -1.5;
  const FitReport r = lst::lst_oracle(perfect_fit(rng, 12, beta), 1.0);
  EXPECT_LE(r.q, 1e-20);
  EXPECT_LE((r.beta - beta).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Oracle, ExampleDataBeatsLineYEqualsX) {
  const FitReport r = lst::lst_oracle(seven_points(), 1.0);
  EXPECT_LE(r.q, 4.86);
  EXPECT_NEAR(r.q, ref_trim(seven_points(), r.beta, 1.0).q, 1e-12);
}

TEST(Oracle, DimensionLimits) {
  std::mt19937_64 rng(52);
  try {
    lst::lst_oracle(random_dataset(rng, 10, 3), 1.0);
    FAIL();
  } catch (const lst::Error& e) {
    EXPECT_EQ(e.code(), lst::ErrorCode::kUnsupportedDimension);
  }
  EXPECT_THROW(lst::lst_oracle(random_dataset(rng, 31, 2), 1.0), lst::Error);
}

TEST(Oracle, LocationSearchIsExhaustiveOverDataValues) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const Dataset d = random_dataset(rng, 11, 1);
    const FitReport r = lst::lst_oracle(d, 1.0);
    // Brute force over a fine grid as an independent check.
    const double lo = d.response().minCoeff();
    const double hi = d.response().maxCoeff();
    for (int k = 0; k <= 5000; ++k) {
      const double b = lo + (hi - lo) * k / 5000.0;
      EXPECT_LE(r.q, ref_trim(d, Coefficients::Constant(1, b), 1.0).q + 1e-12);
    }
  }
}

TEST(Oracle, SandwichesRandomizedSolvers) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 20; ++t) {
    const Dataset d = random_dataset(rng, 12, 2);
    const double oracle = lst::lst_oracle(d, 1.0).q;
    lst::Aa1Config c1;
    c1.seed = static_cast<std::uint64_t>(t);
    lst::Aa2Config c2;
    c2.seed = static_cast<std::uint64_t>(t);
    // The grid is finite, so allow its resolution as slack.
    EXPECT_LE(oracle, lst::lst_fit_aa1(d, c1).q * 1.05 + 1e-9);
    EXPECT_LE(oracle, lst::lst_fit_aa2(d, c2).q * 1.05 + 1e-9);
  }
}

TEST(Oracle, RegressionScaleAndAffineEquivariant) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 10; ++t) {
    const Dataset d = random_dataset(rng, 10, 2);
    const FitReport base = lst::lst_oracle(d, 1.0);
    const double tol = 1e-7 * std::max(1.0, base.beta.norm());

    const Coefficients b = random_vector(rng, 2);
    const FitReport shifted = lst::lst_oracle(lst::shift_response(d, b), 1.0);
    EXPECT_LE((shifted.beta - (base.beta + b)).norm(), tol);

    const FitReport scaled = lst::lst_oracle(lst::scale_response(d, 2.5), 1.0);
    EXPECT_LE((scaled.beta - 2.5 * base.beta).norm(), 2.5 * tol);

    Eigen::MatrixXd a(2, 2);
    a << 1, 0.75, 0, 1.8;
    const FitReport affine = lst::lst_oracle(lst::affine_carriers(d, a), 1.0);
    const Coefficients expected = a.inverse() * base.beta;
    EXPECT_LE((affine.beta - expected).norm(), 10 * tol);
    EXPECT_NEAR(affine.q, base.q, 1e-9 * std::max(1.0, base.q));
  }
}

}  // namespace
