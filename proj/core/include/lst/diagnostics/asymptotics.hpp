#pragma once

namespace lst {

// Constants of the limiting normal law of sqrt(n)(beta_hat - beta) under
// Gaussian errors N(0, sigma^2) independent of the carriers:
//   c     = sigma · Phi^{-1}(3/4)
//   C     = Gamma(1/2, 1) CDF at alpha c / sigma  (= erf(sqrt(alpha c / sigma)))
//   C1    = 2 Phi(alpha c / sigma) - 1
//   avar  = 2 C sigma^2 / C1^2  (per coordinate)
struct AsymptoticConstants {
  double c = 0.0;
  double C = 0.0;
  double C1 = 0.0;
  double avar = 0.0;
};

AsymptoticConstants asymptotic_variance(double alpha, double sigma);

double standard_normal_cdf(double x);

// Newton on Phi with a bisection safeguard, |Phi(x) - prob| <= 1e-12.
double standard_normal_quantile(double prob);

}  // namespace lst
