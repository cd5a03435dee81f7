#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lst/fit_report.hpp"

namespace lst {

enum class Aa2Start { kZero, kLeastSquares };

struct Aa2Config {
  double alpha = 1.0;
  // Defaults to min{C(n, p), 300 (p - 1)}.
  std::optional<std::size_t> n_starts;
  std::uint64_t seed = 0;
  std::size_t max_singular_redraws = 100;
  Aa2Start start = Aa2Start::kZero;
  // As in Aa1Config.
  std::size_t refine_finalists = 20;
  SearchObserver observer;
};

std::size_t default_aa2_starts(Index n, Index p);

// Elemental-subset search with concentration: every interpolating p-subset
// fit that beats the incumbent is refined by repeated least squares on its
// kept set while Q keeps dropping. The search ends after n_starts failed
// rounds.
FitReport lst_fit_aa2(const Dataset& data, const Aa2Config& cfg);

}  // namespace lst
