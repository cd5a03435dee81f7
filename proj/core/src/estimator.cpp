#include "lst/estimator.hpp"

#include <chrono>
#include <numeric>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/trimming.hpp"

namespace lst {

FitReport ls_report(const Dataset& data) {
  const auto started = std::chrono::steady_clock::now();
  FitReport report;
  report.method = Method::kLs;
  report.beta = ls_fit(data);
  report.ls_calls = 1;
  report.q = compute_residuals(data, report.beta).squaredNorm();
  report.kept.resize(static_cast<std::size_t>(data.n()));
  std::iota(report.kept.begin(), report.kept.end(), Index{0});
  report.h = data.n();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

FitReport fit(const Dataset& data, const EstimatorSpec& spec) {
  switch (spec.method) {
    case Method::kLs:
      return ls_report(data);
    case Method::kLstAa1: {
      Aa1Config cfg;
      cfg.alpha = spec.alpha;
      cfg.seed = spec.seed;
      cfg.t_ls_budget = spec.t_ls_budget;
      cfg.refine_finalists = spec.refine_finalists;
      return lst_fit_aa1(data, cfg);
    }
    case Method::kLstAa2: {
      Aa2Config cfg;
      cfg.alpha = spec.alpha;
      cfg.seed = spec.seed;
      cfg.n_starts = spec.n_starts;
      cfg.refine_finalists = spec.refine_finalists;
      return lst_fit_aa2(data, cfg);
    }
    case Method::kLstOracle:
      return lst_oracle(data, spec.alpha);
    case Method::kLts: {
      LtsConfig cfg;
      cfg.h = spec.h;
      cfg.seed = spec.seed;
      if (spec.n_starts) cfg.n_starts = *spec.n_starts;
      return lts_fit(data, cfg);
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown method");
}

}  // namespace lst
