#pragma once

#include <cstddef>
#include <cstdint>

#include "lst/fit_report.hpp"

namespace lst {

// Region-boundary search for the LST estimator.
//
// Each sampled pair (i, j) yields coefficients on which r_i == r_j, i.e. on a
// boundary between two regions of constant kept set. Perturbing every
// coordinate by +-delta around the two boundary points (intercept 0 and 1)
// lands in neighbouring regions; each new region costs one least-squares
// solve on its kept set.
struct Aa1Config {
  double alpha = 1.0;
  std::size_t t_ls_budget = 300;
  std::size_t max_pair_draws = 1000;
  // delta_l = delta_factor * max(1, |beta_l|)
  double delta_factor = 0.1;
  // The lowest-Q candidates are followed to a fixed point of
  // beta <- LS(I(beta)) after the search; 0 returns the raw search result.
  std::size_t refine_finalists = 20;
  std::uint64_t seed = 0;
  SearchObserver observer;
};

// Requires p >= 2, n >= p + 1 and a full-rank design. For p == 1 it
// delegates to the direct depth-trimmed-mean search.
FitReport lst_fit_aa1(const Dataset& data, const Aa1Config& cfg);

// Intercept-only LST: evaluates Q at every y_i and every midpoint of
// consecutive sorted y values, concentrates each candidate onto the mean of
// its kept set and returns the best.
FitReport lst_fit_location(const Dataset& data, double alpha, Method method, std::uint64_t seed);

}  // namespace lst
