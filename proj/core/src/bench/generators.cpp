#include "lst/bench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lst/error.hpp"
#include "lst/sampling.hpp"

namespace lst {
namespace {

Eigen::MatrixXd standard_normal(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) out(i, j) = normal(rng);
  }
  return out;
}

void check_shape(Index n, Index p) {
  if (p < 1) fail(ErrorCode::kInvalidArgument, "p must be >= 1");
  if (n <= p) fail(ErrorCode::kInvalidArgument, "n must exceed p");
}

}  // namespace

Dataset gen_clean_gaussian(Index n, Index p, std::uint64_t seed) {
  check_shape(n, p);
  Rng rng(seed);
  const Eigen::MatrixXd z = standard_normal(n, p, rng);
  return Dataset(z.leftCols(p - 1), z.col(p - 1));
}

Dataset gen_correlated(Index n, Index p, double rho, std::uint64_t seed) {
  check_shape(n, p);
  const double lower = p > 1 ? -1.0 / static_cast<double>(p - 1) : -1.0;
  if (!(rho > lower && rho < 1.0)) fail(ErrorCode::kInvalidArgument, "rho outside the positive-definite range");
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Constant(p, p, rho);
  sigma.diagonal().setOnes();
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) fail(ErrorCode::kInvalidArgument, "equicorrelation matrix not positive definite");
  Rng rng(seed);
  const Eigen::MatrixXd z = standard_normal(n, p, rng) * llt.matrixL().transpose();
  return Dataset(z.leftCols(p - 1), z.col(p - 1));
}

Coefficients correlated_population_beta(Index p, double rho) {
  Coefficients beta = Coefficients::Zero(p);
  if (p > 1) beta.tail(p - 1).setConstant(rho / (1.0 + static_cast<double>(p - 2) * rho));
  return beta;
}

Index contamination_count(Index n, double eps) {
  return static_cast<Index>(std::ceil(eps * static_cast<double>(n) - 1e-9));
}

Contamination contaminate_rows(const Dataset& data, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps < 0.5)) fail(ErrorCode::kInvalidArgument, "eps must lie in [0, 0.5)");
  const Index n = data.n();
  const Index p = data.p();
  const Index count = contamination_count(n, eps);
  Rng rng(seed);
  std::vector<Index> rows = sample_without_replacement(rng, n, count);
  std::sort(rows.begin(), rows.end());

  Eigen::MatrixXd carriers = data.carriers();
  Eigen::VectorXd response = data.response();
  std::normal_distribution<double> normal(0.0, std::sqrt(0.1));
  for (Index i : rows) {
    for (Index c = 0; c < p - 1; ++c) carriers(i, c) = 7.0 + normal(rng);
    response(i) = -2.0 + normal(rng);
  }
  return {Dataset(carriers, response), std::move(rows)};
}

Dataset contaminate(const Dataset& data, double eps, std::uint64_t seed) {
  return contaminate_rows(data, eps, seed).data;
}

}  // namespace lst
