#include "lst/robust.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lst/error.hpp"

namespace lst {

double median_inplace(std::span<double> scratch) {
  if (scratch.empty()) fail(ErrorCode::kEmptyInput, "median of an empty sequence");
  const std::size_t n = scratch.size();
  const auto mid = scratch.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(scratch.begin(), mid, scratch.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(scratch.begin(), mid);
  return 0.5 * (lower + upper);
}

double median(std::span<const double> values) {
  std::vector<double> scratch(values.begin(), values.end());
  return median_inplace(scratch);
}

double mad(std::span<const double> values) {
  std::vector<double> scratch(values.begin(), values.end());
  const double center = median_inplace(scratch);
  for (std::size_t i = 0; i < values.size(); ++i) scratch[i] = std::abs(values[i] - center);
  return median_inplace(scratch);
}

}  // namespace lst
