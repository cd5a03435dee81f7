#include "lst/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/trimming.hpp"

namespace lst {
namespace {

constexpr int kGridPoints = 200;
constexpr double kBoxScales = 10.0;
constexpr int kRefinements = 2;

struct Best {
  double q = std::numeric_limits<double>::infinity();
  Coefficients beta;

  void offer(const Dataset& data, const Coefficients& beta_try, double alpha) {
    const double q_try = objective_q(data, beta_try, alpha).q;
    if (q_try < q) {
      q = q_try;
      beta = beta_try;
    }
  }
};

double grid_offset(int k, double half_width) {
  return half_width * (-1.0 + 2.0 * static_cast<double>(k) / (kGridPoints - 1));
}

Best search_location(const Dataset& data, double alpha) {
  const Eigen::VectorXd& y = data.response();
  const Index n = data.n();
  Best best;
  Coefficients beta(1);
  for (Index i = 0; i < n; ++i) {
    beta(0) = y(i);
    best.offer(data, beta, alpha);
    for (Index j = i + 1; j < n; ++j) {
      beta(0) = 0.5 * (y(i) + y(j));
      best.offer(data, beta, alpha);
    }
  }
  const double lo = y.minCoeff();
  const double hi = y.maxCoeff();
  constexpr int kSteps = 2000;
  for (int k = 0; k <= kSteps; ++k) {
    beta(0) = lo + (hi - lo) * static_cast<double>(k) / kSteps;
    best.offer(data, beta, alpha);
  }
  // Depths of y_i - b do not depend on b, so the kept set is fixed and its
  // mean minimizes Q exactly.
  const TrimState state = trim_state(data, best.beta, alpha);
  double sum = 0.0;
  for (Index i : state.kept) sum += y(i);
  beta(0) = sum / static_cast<double>(state.kept.size());
  best.offer(data, beta, alpha);
  return best;
}

Best search_line(const Dataset& data, double alpha) {
  const Eigen::VectorXd x = data.design().col(1);
  Index row_lo = 0;
  Index row_hi = 0;
  x.minCoeff(&row_lo);
  x.maxCoeff(&row_hi);
  const double x_lo = x(row_lo);
  const double x_hi = x(row_hi);
  if (x_hi == x_lo) fail(ErrorCode::kDegenerateDesign, "all carriers identical");

  const Coefficients ls = ls_fit(data);
  const Eigen::VectorXd resid = compute_residuals(data, ls);
  const double scale = std::sqrt(resid.squaredNorm() / static_cast<double>(std::max<Index>(data.n() - 2, 1)));

  Best best;
  best.offer(data, ls, alpha);
  if (scale == 0.0) return best;

  // Line through (x_lo, u) and (x_hi, v).
  auto line = [&](double u, double v) {
    Coefficients beta(2);
    beta(1) = (v - u) / (x_hi - x_lo);
    beta(0) = u - beta(1) * x_lo;
    return beta;
  };

  // Each refinement is centred on the incumbent so far.
  double best_u = ls(0) + ls(1) * x_lo;
  double best_v = ls(0) + ls(1) * x_hi;
  double half_width = kBoxScales * scale;
  for (int level = 0; level <= kRefinements; ++level) {
    const double center_u = best_u;
    const double center_v = best_v;
    for (int a = 0; a < kGridPoints; ++a) {
      const double u = center_u + grid_offset(a, half_width);
      for (int b = 0; b < kGridPoints; ++b) {
        const double v = center_v + grid_offset(b, half_width);
        const double before = best.q;
        best.offer(data, line(u, v), alpha);
        if (best.q < before) {
          best_u = u;
          best_v = v;
        }
      }
    }
    half_width /= 10.0;
  }
  return best;
}

}  // namespace

FitReport lst_oracle(const Dataset& data, double alpha) {
  const auto started = std::chrono::steady_clock::now();
  if (!(alpha >= 1.0)) fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
  if (data.p() > 2) fail(ErrorCode::kUnsupportedDimension, "oracle supports p <= 2 only");
  if (data.n() > 30) fail(ErrorCode::kUnsupportedDimension, "oracle supports n <= 30 only");

  const Best best = data.p() == 1 ? search_location(data, alpha) : search_line(data, alpha);
  FitReport report;
  report.method = Method::kLstOracle;
  report.alpha = alpha;
  report.beta = best.beta;
  report.q = best.q;
  report.kept = trim_state(data, best.beta, alpha).kept;
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace lst
