#pragma once

#include <cstdint>
#include <optional>

#include "lst/aa1.hpp"
#include "lst/aa2.hpp"
#include "lst/fit_report.hpp"
#include "lst/lts.hpp"
#include "lst/oracle.hpp"

namespace lst {

// Method tag plus the knobs shared by the CLI, the benchmark harness and the
// breakdown probe.
struct EstimatorSpec {
  Method method = Method::kLstAa1;
  double alpha = 1.0;
  std::optional<Index> h;
  std::uint64_t seed = 0;
  std::size_t t_ls_budget = 300;
  std::optional<std::size_t> n_starts;
  std::size_t refine_finalists = 20;
};

FitReport ls_report(const Dataset& data);

FitReport fit(const Dataset& data, const EstimatorSpec& spec);

}  // namespace lst
