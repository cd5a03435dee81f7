#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lst {

using Index = Eigen::Index;

// Candidate or fitted regression coefficients; entry 0 is the intercept.
using Coefficients = Eigen::VectorXd;

// n observations (x_i', y_i) of the linear model y = (1, x')·beta + e.
//
// The design matrix (with its leading column of ones) is materialized once at
// construction because every estimator evaluates residuals against it many
// times. Rows are addressed by stable 0-based index.
class Dataset {
 public:
  // carriers: n x (p-1), response: n. Throws on empty input, size mismatch
  // or non-finite entries.
  Dataset(const Eigen::MatrixXd& carriers, const Eigen::VectorXd& response);

  // Builds from a full design matrix whose first column must be all ones.
  static Dataset from_design(const Eigen::MatrixXd& design,
                             const Eigen::VectorXd& response);

  Index n() const { return design_.rows(); }
  Index p() const { return design_.cols(); }

  const Eigen::MatrixXd& design() const { return design_; }
  const Eigen::VectorXd& response() const { return response_; }
  Eigen::MatrixXd carriers() const { return design_.rightCols(p() - 1); }

  // Rows restricted to `rows`, in the given order.
  Dataset subset(std::span<const Index> rows) const;

 private:
  Dataset() = default;

  Eigen::MatrixXd design_;
  Eigen::VectorXd response_;
};

}  // namespace lst
