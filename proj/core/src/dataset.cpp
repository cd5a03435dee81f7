#include "lst/dataset.hpp"

#include <string>

#include "lst/error.hpp"

namespace lst {

Dataset::Dataset(const Eigen::MatrixXd& carriers,
                 const Eigen::VectorXd& response) {
  if (response.size() == 0) fail(ErrorCode::kEmptyInput, "dataset has no rows");
  if (carriers.rows() != response.size()) {
    fail(ErrorCode::kDimensionMismatch,
         "carriers have " + std::to_string(carriers.rows()) +
             " rows but response has " + std::to_string(response.size()));
  }
  if (!carriers.allFinite() || !response.allFinite()) {
    fail(ErrorCode::kInvalidArgument, "dataset contains non-finite values");
  }
  design_.resize(response.size(), carriers.cols() + 1);
  design_.col(0).setOnes();
  design_.rightCols(carriers.cols()) = carriers;
  response_ = response;
}

Dataset Dataset::from_design(const Eigen::MatrixXd& design,
                             const Eigen::VectorXd& response) {
  if (design.cols() < 1) fail(ErrorCode::kDimensionMismatch, "empty design");
  if (!(design.col(0).array() == 1.0).all()) {
    fail(ErrorCode::kInvalidArgument, "design must start with a column of ones");
  }
  return Dataset(design.rightCols(design.cols() - 1), response);
}

Dataset Dataset::subset(std::span<const Index> rows) const {
  Dataset out;
  out.design_.resize(static_cast<Index>(rows.size()), p());
  out.response_.resize(static_cast<Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Index i = rows[k];
    if (i < 0 || i >= n()) fail(ErrorCode::kInvalidArgument, "row index out of range");
    out.design_.row(static_cast<Index>(k)) = design_.row(i);
    out.response_(static_cast<Index>(k)) = response_(i);
  }
  if (rows.empty()) fail(ErrorCode::kEmptyInput, "empty row subset");
  return out;
}

}  // namespace lst
