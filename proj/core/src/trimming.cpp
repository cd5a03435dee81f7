#include "lst/trimming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lst/error.hpp"
#include "lst/robust.hpp"

namespace lst {

Eigen::VectorXd compute_residuals(const Dataset& data, const Coefficients& beta) {
  if (beta.size() != data.p()) {
    fail(ErrorCode::kDimensionMismatch,
         "coefficients have length " + std::to_string(beta.size()) +
             " but the model dimension is " + std::to_string(data.p()));
  }
  return data.response() - data.design() * beta;
}

TrimState trim_residuals(Eigen::VectorXd residuals, double alpha) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::kInvalidArgument, "alpha must be a finite value >= 1");
  }
  if (residuals.size() == 0) fail(ErrorCode::kEmptyInput, "no residuals");

  TrimState state;
  state.alpha = alpha;
  const Index n = residuals.size();

  std::vector<double> scratch(residuals.data(), residuals.data() + n);
  state.m = median_inplace(scratch);
  for (Index i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = std::abs(residuals(i) - state.m);
  const double raw_mad = median_inplace(scratch);
  if (raw_mad > 0.0) {
    state.sigma = raw_mad;
  } else {
    state.sigma = 1.0;
    state.sigma_degenerate = true;
  }

  state.depths = (residuals.array() - state.m).abs() / state.sigma;
  state.kept.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    if (state.depths(i) <= alpha) state.kept.push_back(i);
  }
  state.residuals = std::move(residuals);
  return state;
}

TrimState trim_state(const Dataset& data, const Coefficients& beta, double alpha) {
  return trim_residuals(compute_residuals(data, beta), alpha);
}

double kept_sum_of_squares(const TrimState& state) {
  double q = 0.0;
  for (Index i : state.kept) q += state.residuals(i) * state.residuals(i);
  return q;
}

ObjectiveValue objective_q(const Dataset& data, const Coefficients& beta, double alpha) {
  const TrimState state = trim_state(data, beta, alpha);
  return {kept_sum_of_squares(state), static_cast<Index>(state.kept.size())};
}

std::optional<RegionSignature> region_signature(const TrimState& state, TiePolicy policy) {
  const Index n = state.residuals.size();
  Index central_lo = -1;
  Index central_hi = -1;
  if (policy == TiePolicy::kIgnoreCentralPair && n % 2 == 0 && n > 0) {
    std::vector<Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), Index{0});
    const auto by_residual = [&](Index a, Index b) {
      return state.residuals(a) < state.residuals(b) ||
             (state.residuals(a) == state.residuals(b) && a < b);
    };
    const auto mid = idx.begin() + n / 2;
    std::nth_element(idx.begin(), mid, idx.end(), by_residual);
    central_hi = *mid;
    central_lo = *std::max_element(idx.begin(), mid, by_residual);
  }
  const auto central_pair = [&](Index a, Index b) {
    return (a == central_lo && b == central_hi) || (a == central_hi && b == central_lo);
  };

  std::vector<Index> order = state.kept;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const double da = state.depths(a);
    const double db = state.depths(b);
    return da < db || (da == db && a < b);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const double lo = state.depths(order[k - 1]);
    const double hi = state.depths(order[k]);
    if (hi - lo <= kDepthTieTolerance * std::max({1.0, lo, hi}) &&
        !central_pair(order[k - 1], order[k])) {
      return std::nullopt;
    }
  }
  return RegionSignature(std::move(order));
}

bool design_rank_ok(const Dataset& data) {
  if (data.n() < data.p()) return false;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(data.design());
  qr.setThreshold(1e-12);
  return qr.rank() == data.p();
}

}  // namespace lst
