#pragma once

#include <span>

#include "lst/dataset.hpp"

namespace lst {

// sum_i ||T_i - beta0||^2 / R
double emse(std::span<const Coefficients> estimates, const Coefficients& beta0);

// emse() against the sample mean of the estimates (at least two).
double empirical_variance_mode(std::span<const Coefficients> estimates);

}  // namespace lst
