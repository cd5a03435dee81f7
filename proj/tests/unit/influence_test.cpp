#include <random>

#include <gtest/gtest.h>

#include "lst/diagnostics/influence.hpp"
#include "lst/error.hpp"
#include "lst/estimator.hpp"
#include "lst/trimming.hpp"
#include "reference.hpp"

namespace {

using lst::ContaminationPoint;
using namespace lst::testing;

ContaminationPoint point(const Eigen::VectorXd& s0, double t0) { return ContaminationPoint{s0, t0}; }

// t0 placed so that r0 takes the requested value.
double response_for(const Eigen::VectorXd& s0, const lst::Coefficients& beta, double r0) {
  return r0 + beta(0) + s0.dot(beta.tail(beta.size() - 1));
}

TEST(Influence, OutsideBandIsZero) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  const lst::Coefficients beta = lst::Coefficients::Zero(3);
  const Eigen::VectorXd s0 = Eigen::VectorXd::Ones(2);
  // r0 = m + 2 alpha sigma with m = 0.3, sigma = 1.5, alpha = 1
  const auto v = lst::influence_function(point(s0, response_for(s0, beta, 0.3 + 3.0)), beta, 0.3, 1.5, 1.0, m);
  EXPECT_EQ(v, Eigen::VectorXd::Zero(3));
}

TEST(Influence, ZeroResidualGivesZero) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
  lst::Coefficients beta(2);
  beta << 1, 2;
  Eigen::VectorXd s0(1);
  s0 << 0.7;
  const auto v = lst::influence_function(point(s0, response_for(s0, beta, 0.0)), beta, 0.0, 1.0, 1.0, m);
  EXPECT_EQ(v, Eigen::VectorXd::Zero(2));
}

TEST(Influence, IdentityMomentsAtOrigin) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  const lst::Coefficients beta = lst::Coefficients::Zero(3);
  const auto v = lst::influence_function(point(Eigen::VectorXd::Zero(2), 0.5), beta, 0.0, 1.0, 1.0, m);
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
  expected(0) = 0.5;
  EXPECT_EQ(v, expected);
}

TEST(Influence, BandBoundaryIsInside) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
  const lst::Coefficients beta = lst::Coefficients::Zero(1);
  const Eigen::VectorXd none(0);
  EXPECT_EQ(lst::influence_function(point(none, 3.0), beta, 1.0, 1.0, 2.0, m)(0), 3.0);
  EXPECT_EQ(lst::influence_function(point(none, -1.0), beta, 1.0, 1.0, 2.0, m)(0), -1.0);
  EXPECT_EQ(lst::influence_function(point(none, std::nextafter(3.0, 4.0)), beta, 1.0, 1.0, 2.0, m)(0), 0.0);
}

TEST(Influence, MatchesExplicitFormulaAndIsLinear) {
  std::mt19937_64 rng(81);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    Eigen::MatrixXd a(3, 3);
    for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = g(rng);
    const Eigen::MatrixXd m = a * a.transpose() + Eigen::MatrixXd::Identity(3, 3);
    const lst::Coefficients beta = random_vector(rng, 3);
    const Eigen::VectorXd s0 = random_vector(rng, 2);
    const double r0 = 0.4 * g(rng);  // 2 r0 stays inside the band [-10, 10]
    const auto v1 = lst::influence_function(point(s0, response_for(s0, beta, r0)), beta, 0.0, 1.0, 10.0, m);
    const auto v2 = lst::influence_function(point(s0, response_for(s0, beta, 2 * r0)), beta, 0.0, 1.0, 10.0, m);
    Eigen::VectorXd w(3);
    w << 1.0, s0(0), s0(1);
    const Eigen::VectorXd expected = r0 * m.inverse() * w;
    EXPECT_LE((v1 - expected).norm(), 1e-9 * std::max(1.0, expected.norm()));
    EXPECT_LE((v2 - 2.0 * v1).norm(), 1e-9 * std::max(1.0, v1.norm()));
  }
}

TEST(Influence, SingularMomentsRejected) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  try {
    lst::influence_function(point(Eigen::VectorXd::Zero(1), 0.1), lst::Coefficients::Zero(2), 0.0, 1.0, 1.0, m);
    FAIL();
  } catch (const lst::Error& e) {
    EXPECT_EQ(e.code(), lst::ErrorCode::kSingularMatrix);
  }
}

TEST(EmpiricalInfluence, Examples) {
  std::mt19937_64 rng(82);
  const lst::Dataset d = random_dataset(rng, 40, 3);
  lst::EstimatorSpec spec;
  spec.method = lst::Method::kLstAa2;
  const lst::FitReport fit = lst::fit(d, spec);

  const Eigen::VectorXd s0 = d.carriers().row(0).transpose();
  EXPECT_EQ(lst::empirical_if(d, 1.0, point(s0, 1e12), fit), Eigen::VectorXd::Zero(3));

  // On the fitted hyperplane r0 = 0; the band contains 0 whenever |m| <= alpha sigma.
  const lst::TrimState state = lst::trim_state(d, fit.beta, 1.0);
  if (std::abs(state.m) <= state.sigma) {
    EXPECT_EQ(lst::empirical_if(d, 1.0, point(s0, response_for(s0, fit.beta, 0.0)), fit), Eigen::VectorXd::Zero(3));
  }

  // A kept sample point against the hand-assembled plug-in quantities.
  const RefTrim ref = ref_trim(d, fit.beta, 1.0);
  Eigen::MatrixXd mhat = Eigen::MatrixXd::Zero(3, 3);
  for (lst::Index i : ref.kept) mhat += d.design().row(i).transpose() * d.design().row(i);
  mhat /= static_cast<double>(d.n());
  const lst::Index row = ref.kept.front();
  const ContaminationPoint z0 = point(d.carriers().row(row).transpose(), d.response()(row));
  const auto got = lst::empirical_if(d, 1.0, z0, fit);
  const auto expected = lst::influence_function(z0, fit.beta, ref.m, ref.sigma, 1.0, mhat);
  EXPECT_LE((got - expected).norm(), 1e-12 * std::max(1.0, expected.norm()));
  EXPECT_GT(got.norm(), 0.0);
}

}  // namespace
