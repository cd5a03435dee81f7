#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lst/dataset.hpp"

namespace lst {

enum class Method { kLs, kLstAa1, kLstAa2, kLstOracle, kLts };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view tag);
bool is_lst(Method method);

// Estimator output.
//
// `q` is the method's own objective at `beta`: the depth-trimmed Q for LST
// methods, the sum of the h smallest squared residuals for LTS and the full
// residual sum of squares for LS. `kept` is I(beta) for LST methods, the
// h-subset for LTS and every row for LS. `draws` counts pairs (AA1) or
// elemental subsets (AA2, LTS) sampled.
struct FitReport {
  Method method = Method::kLs;
  Coefficients beta;
  double q = 0.0;
  std::vector<Index> kept;
  std::size_t ls_calls = 0;
  std::size_t draws = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t seed = 0;
  double alpha = 1.0;
  Index h = 0;
};

// Recomputes the method's objective at report.beta from scratch.
double recompute_objective(const Dataset& data, const FitReport& report);

// True iff the LS fit on I(beta) reproduces beta to 1e-6 (relative, with a
// unit floor): beta is a fixed point of "trim, then least squares".
bool verify_fixed_point(const Dataset& data, const FitReport& report, double alpha);

// One evaluated candidate inside a randomized search. `round` is the
// pair/start index the candidate belongs to.
struct SearchEvent {
  std::size_t round = 0;
  const Coefficients& beta;
  double q = 0.0;
  double incumbent_q = 0.0;
};

using SearchObserver = std::function<void(const SearchEvent&)>;

}  // namespace lst
