#include "lst/least_squares.hpp"

#include <string>

#include "lst/error.hpp"

namespace lst {
namespace {

constexpr double kRankThreshold = 1e-12;

Coefficients solve_qr(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < design.cols()) {
    fail(ErrorCode::kRankDeficient,
         "least-squares design has rank " + std::to_string(qr.rank()) + " < " +
             std::to_string(design.cols()));
  }
  return qr.solve(response);
}

}  // namespace

Coefficients ls_fit(const Dataset& data, std::optional<std::span<const Index>> subset) {
  if (!subset || subset->empty()) {
    if (data.n() < data.p()) fail(ErrorCode::kRankDeficient, "fewer rows than coefficients");
    return solve_qr(data.design(), data.response());
  }
  const auto rows = *subset;
  const auto k = static_cast<Index>(rows.size());
  if (k < data.p()) fail(ErrorCode::kRankDeficient, "subset smaller than model dimension");
  Eigen::MatrixXd design(k, data.p());
  Eigen::VectorXd response(k);
  for (Index r = 0; r < k; ++r) {
    const Index i = rows[static_cast<std::size_t>(r)];
    design.row(r) = data.design().row(i);
    response(r) = data.response()(i);
  }
  return solve_qr(design, response);
}

std::optional<Coefficients> elemental_fit(const Dataset& data, std::span<const Index> rows) {
  const Index p = data.p();
  if (static_cast<Index>(rows.size()) != p) {
    fail(ErrorCode::kDimensionMismatch, "elemental subset must contain exactly p rows");
  }
  Eigen::MatrixXd system(p, p);
  Eigen::VectorXd rhs(p);
  for (Index r = 0; r < p; ++r) {
    system.row(r) = data.design().row(rows[static_cast<std::size_t>(r)]);
    rhs(r) = data.response()(rows[static_cast<std::size_t>(r)]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(kRankThreshold);
  if (!lu.isInvertible()) return std::nullopt;
  return Coefficients(lu.solve(rhs));
}

}  // namespace lst
