#pragma once

#include <span>

namespace lst {

// Middle order statistic; the mean of the two central order statistics for
// even lengths. Throws kEmptyInput on an empty span.
double median(std::span<const double> values);

// Raw median absolute deviation from the median (no Gaussian consistency
// factor).
double mad(std::span<const double> values);

// Same as median() but reorders `scratch` in place instead of copying.
double median_inplace(std::span<double> scratch);

}  // namespace lst
