#pragma once

#include <cstdint>
#include <vector>

#include "lst/dataset.hpp"

namespace lst {

// Carriers and response i.i.d. N(0, 1); the true coefficients are zero.
Dataset gen_clean_gaussian(Index n, Index p, std::uint64_t seed);

// Rows (x', y)' ~ N(0, (1 - rho) I + rho 11'). Throws kInvalidArgument
// unless -1/(p-1) < rho < 1.
Dataset gen_correlated(Index n, Index p, double rho, std::uint64_t seed);

// Population regression coefficients of y on x under the equicorrelation
// model: intercept 0 and every slope rho / (1 + (p - 2) rho).
Coefficients correlated_population_beta(Index p, double rho);

struct Contamination {
  Dataset data;
  std::vector<Index> rows;  // replaced rows, ascending
};

// Number of rows replaced for fraction eps: ceil(eps * n).
Index contamination_count(Index n, double eps);

// Replaces ceil(eps n) distinct rows, chosen uniformly, by draws from
// N(mu_c, 0.1 I) with mu_c = (7, ..., 7, -2) (the last entry is the
// response). Requires 0 <= eps < 0.5.
Contamination contaminate_rows(const Dataset& data, double eps, std::uint64_t seed);
Dataset contaminate(const Dataset& data, double eps, std::uint64_t seed);

}  // namespace lst
