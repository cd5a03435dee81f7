#include "lst/diagnostics/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "lst/error.hpp"

namespace lst {

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double standard_normal_quantile(double prob) {
  if (!(prob > 0.0 && prob < 1.0)) fail(ErrorCode::kInvalidArgument, "probability must lie in (0, 1)");
  double lo = -40.0;
  double hi = 40.0;
  double x = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double err = standard_normal_cdf(x) - prob;
    if (std::abs(err) <= 1e-15) break;
    if (err > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double density = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    double next = x - err / density;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

AsymptoticConstants asymptotic_variance(double alpha, double sigma) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) fail(ErrorCode::kInvalidArgument, "alpha must be finite and >= 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) fail(ErrorCode::kInvalidArgument, "sigma must be finite and > 0");
  AsymptoticConstants k;
  k.c = sigma * standard_normal_quantile(0.75);
  const double cut = alpha * k.c / sigma;
  k.C = std::erf(std::sqrt(cut));
  k.C1 = 2.0 * standard_normal_cdf(cut) - 1.0;
  k.avar = 2.0 * k.C * sigma * sigma / (k.C1 * k.C1);
  return k;
}

}  // namespace lst
