#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lst/fit_report.hpp"

namespace lst {

struct LtsConfig {
  // Defaults to floor((n + p + 1) / 2).
  std::optional<Index> h;
  std::size_t n_starts = 500;
  std::size_t c_steps_initial = 2;
  std::size_t n_finalists = 10;
  std::size_t max_c_steps = 100;
  std::uint64_t seed = 0;
  SearchObserver observer;
};

Index default_lts_h(Index n, Index p);

// Sum of the h smallest squared residuals at beta.
double lts_objective(const Dataset& data, const Coefficients& beta, Index h);

// FAST-LTS style search: elemental starts, a few concentration steps each,
// then the best finalists iterated to convergence.
FitReport lts_fit(const Dataset& data, const LtsConfig& cfg);

}  // namespace lst
