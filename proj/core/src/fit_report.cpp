#include "lst/fit_report.hpp"

#include <algorithm>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/lts.hpp"
#include "lst/trimming.hpp"

namespace lst {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kLs: return "ls";
    case Method::kLstAa1: return "lst-aa1";
    case Method::kLstAa2: return "lst-aa2";
    case Method::kLstOracle: return "lst-oracle";
    case Method::kLts: return "lts";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view tag) {
  for (Method m : {Method::kLs, Method::kLstAa1, Method::kLstAa2, Method::kLstOracle, Method::kLts}) {
    if (to_string(m) == tag) return m;
  }
  return std::nullopt;
}

bool is_lst(Method method) {
  return method == Method::kLstAa1 || method == Method::kLstAa2 || method == Method::kLstOracle;
}

double recompute_objective(const Dataset& data, const FitReport& report) {
  switch (report.method) {
    case Method::kLs: return compute_residuals(data, report.beta).squaredNorm();
    case Method::kLts: return lts_objective(data, report.beta, report.h);
    default: return objective_q(data, report.beta, report.alpha).q;
  }
}

bool verify_fixed_point(const Dataset& data, const FitReport& report, double alpha) {
  const TrimState state = trim_state(data, report.beta, alpha);
  Coefficients refit;
  try {
    refit = ls_fit(data, std::span<const Index>(state.kept));
  } catch (const Error&) {
    return false;
  }
  const double scale = std::max(1.0, report.beta.norm());
  return (refit - report.beta).norm() <= 1e-6 * scale;
}

}  // namespace lst
