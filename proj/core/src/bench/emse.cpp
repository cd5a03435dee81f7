#include "lst/bench/emse.hpp"

#include "lst/error.hpp"

namespace lst {

double emse(std::span<const Coefficients> estimates, const Coefficients& beta0) {
  if (estimates.empty()) fail(ErrorCode::kEmptyInput, "emse of an empty estimate list");
  double total = 0.0;
  for (const Coefficients& t : estimates) {
    if (t.size() != beta0.size()) fail(ErrorCode::kDimensionMismatch, "estimate length differs from beta0");
    total += (t - beta0).squaredNorm();
  }
  return total / static_cast<double>(estimates.size());
}

double empirical_variance_mode(std::span<const Coefficients> estimates) {
  if (estimates.size() < 2) fail(ErrorCode::kEmptyInput, "need at least two estimates");
  Coefficients mean = Coefficients::Zero(estimates.front().size());
  for (const Coefficients& t : estimates) {
    if (t.size() != mean.size()) fail(ErrorCode::kDimensionMismatch, "estimates differ in length");
    mean += t;
  }
  mean /= static_cast<double>(estimates.size());
  return emse(estimates, mean);
}

}  // namespace lst
