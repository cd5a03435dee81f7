#include "lst/diagnostics/equivariance.hpp"

#include <cmath>

#include "lst/error.hpp"

namespace lst {

Dataset shift_response(const Dataset& data, const Coefficients& b) {
  if (b.size() != data.p()) fail(ErrorCode::kDimensionMismatch, "shift must have length p");
  return Dataset::from_design(data.design(), data.response() + data.design() * b);
}

Dataset scale_response(const Dataset& data, double s) {
  if (!std::isfinite(s)) fail(ErrorCode::kInvalidArgument, "scale must be finite");
  return Dataset::from_design(data.design(), s * data.response());
}

Dataset affine_carriers(const Dataset& data, const Eigen::MatrixXd& A) {
  const Index p = data.p();
  if (A.rows() != p || A.cols() != p) fail(ErrorCode::kDimensionMismatch, "A must be p x p");
  if (A(0, 0) != 1.0 || (p > 1 && !A.col(0).tail(p - 1).isZero(0.0))) {
    fail(ErrorCode::kInvalidArgument, "A must map the intercept coordinate onto itself");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) fail(ErrorCode::kSingularMatrix, "A is singular");
  Eigen::MatrixXd design = data.design() * A;
  design.col(0).setOnes();
  return Dataset::from_design(design, data.response());
}

}  // namespace lst
