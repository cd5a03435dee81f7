#include "lst/diagnostics/influence.hpp"

#include "lst/error.hpp"

namespace lst {

Eigen::VectorXd influence_function(const ContaminationPoint& z0, const Coefficients& beta, double m,
                                   double sigma, double alpha, const Eigen::MatrixXd& M) {
  const Index p = beta.size();
  if (z0.s0.size() != p - 1) fail(ErrorCode::kDimensionMismatch, "s0 must have length p - 1");
  if (M.rows() != p || M.cols() != p) fail(ErrorCode::kDimensionMismatch, "M must be p x p");
  if (!(sigma > 0.0)) fail(ErrorCode::kInvalidArgument, "sigma must be positive");

  Eigen::VectorXd w(p);
  w(0) = 1.0;
  w.tail(p - 1) = z0.s0;
  const double r0 = z0.t0 - w.dot(beta);
  if (r0 < m - alpha * sigma || r0 > m + alpha * sigma) return Eigen::VectorXd::Zero(p);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible()) fail(ErrorCode::kSingularMatrix, "M is not invertible");
  const Eigen::VectorXd direction = lu.solve(w);
  return r0 * direction;
}

Eigen::MatrixXd kept_moment_matrix(const Dataset& data, const TrimState& state) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(data.p(), data.p());
  for (Index i : state.kept) {
    const auto w = data.design().row(i);
    M.noalias() += w.transpose() * w;
  }
  return M / static_cast<double>(data.n());
}

Eigen::VectorXd empirical_if(const Dataset& data, double alpha, const ContaminationPoint& z0,
                             const FitReport& fit) {
  const TrimState state = trim_state(data, fit.beta, alpha);
  return influence_function(z0, fit.beta, state.m, state.sigma, alpha, kept_moment_matrix(data, state));
}

}  // namespace lst
