#include "lst/diagnostics/breakdown.hpp"

#include <cmath>

#include "lst/error.hpp"

namespace lst {

Rational rbp(Index n, Index p) {
  if (p < 1 || n <= 2 * p + 1) fail(ErrorCode::kInvalidArgument, "rbp requires p >= 1 and n > 2p + 1");
  if (p == 1) return {(n + 1) / 2, n};
  return {n / 2 - p + 2, n};
}

std::vector<ProbePoint> breakdown_probe(const Dataset& data, const EstimatorSpec& fitter, Index m_contam,
                                        std::span<const double> magnitudes, const ProbeGeometry& geometry) {
  const Index n = data.n();
  const Index q = data.p() - 1;
  if (m_contam < 0 || m_contam >= n) fail(ErrorCode::kInvalidArgument, "m_contam must lie in [0, n)");
  for (std::size_t k = 0; k < magnitudes.size(); ++k) {
    if (!(magnitudes[k] > 0.0) || !std::isfinite(magnitudes[k]) || (k > 0 && !(magnitudes[k] > magnitudes[k - 1]))) {
      fail(ErrorCode::kInvalidArgument, "magnitudes must be finite, positive and ascending");
    }
  }
  Eigen::VectorXd direction = geometry.direction.value_or(Eigen::VectorXd::Ones(q));
  if (direction.size() != q) fail(ErrorCode::kDimensionMismatch, "probe direction must have length p - 1");

  const Coefficients clean = fit(data, fitter).beta;
  std::vector<ProbePoint> curve;
  curve.reserve(magnitudes.size());
  for (double magnitude : magnitudes) {
    Eigen::MatrixXd carriers = data.carriers();
    Eigen::VectorXd response = data.response();
    const double y = geometry.response == ProbeResponse::kTilt ? -magnitude * magnitude : -magnitude;
    for (Index i = 0; i < m_contam; ++i) {
      carriers.row(i) = magnitude * direction.transpose();
      response(i) = y;
    }
    const Coefficients contaminated = fit(Dataset(carriers, response), fitter).beta;
    curve.push_back({magnitude, (contaminated - clean).norm()});
  }
  return curve;
}

}  // namespace lst
