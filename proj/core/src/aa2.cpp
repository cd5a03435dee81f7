#include "lst/aa2.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "lst/aa1.hpp"
#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/refine.hpp"
#include "lst/sampling.hpp"
#include "lst/trimming.hpp"

namespace lst {
namespace {

constexpr double kEqualityTolerance = 1e-12;

bool same_objective(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= kEqualityTolerance * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::size_t default_aa2_starts(Index n, Index p) {
  const std::size_t cap = 300 * static_cast<std::size_t>(std::max<Index>(p - 1, 1));
  // C(n, p) with early exit once it exceeds the cap.
  double binom = 1.0;
  for (Index k = 1; k <= p; ++k) {
    binom = binom * static_cast<double>(n - p + k) / static_cast<double>(k);
    if (binom >= static_cast<double>(cap)) return cap;
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(binom)));
}

FitReport lst_fit_aa2(const Dataset& data, const Aa2Config& cfg) {
  if (!(cfg.alpha >= 1.0)) fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
  if (data.p() == 1) return lst_fit_location(data, cfg.alpha, Method::kLstAa2, cfg.seed);

  const auto started = std::chrono::steady_clock::now();
  const Index n = data.n();
  const Index p = data.p();
  if (n <= p) fail(ErrorCode::kDegenerateDesign, "AA2 needs n > p");
  if (!design_rank_ok(data)) fail(ErrorCode::kDegenerateDesign, "design is rank deficient");
  const std::size_t n_starts = cfg.n_starts.value_or(default_aa2_starts(n, p));
  if (n_starts < 1) fail(ErrorCode::kInvalidArgument, "n_starts must be >= 1");
  if (cfg.max_singular_redraws < 1) fail(ErrorCode::kInvalidArgument, "max_singular_redraws must be >= 1");

  FitReport report;
  report.method = Method::kLstAa2;
  report.seed = cfg.seed;
  report.alpha = cfg.alpha;
  report.q = std::numeric_limits<double>::infinity();
  report.beta = Coefficients::Zero(p);

  if (cfg.start == Aa2Start::kLeastSquares) {
    report.beta = ls_fit(data);
    ++report.ls_calls;
    TrimState state = trim_state(data, report.beta, cfg.alpha);
    report.q = kept_sum_of_squares(state);
    report.kept = std::move(state.kept);
  }

  FinalistPool finalists(cfg.refine_finalists);
  if (cfg.start == Aa2Start::kLeastSquares) finalists.offer(report.q, report.beta);

  Rng rng(cfg.seed);
  std::size_t failed_rounds = 0;
  std::size_t round = 0;
  while (failed_rounds < n_starts) {
    std::optional<Coefficients> elemental;
    for (std::size_t singular = 0; !elemental; ++singular) {
      if (singular >= cfg.max_singular_redraws) {
        fail(ErrorCode::kTooManySingularDraws, "too many consecutive singular elemental subsets");
      }
      const std::vector<Index> rows = sample_without_replacement(rng, n, p);
      ++report.draws;
      elemental = elemental_fit(data, rows);
    }

    Coefficients beta_new = std::move(*elemental);
    for (bool first_step = true;; first_step = false) {
      TrimState state = trim_state(data, beta_new, cfg.alpha);
      const double q_new = kept_sum_of_squares(state);
      finalists.offer(q_new, beta_new);
      const bool improved = !same_objective(q_new, report.q) && q_new < report.q;
      if (improved) {
        report.q = q_new;
        report.beta = beta_new;
        report.kept = std::move(state.kept);
      }
      if (cfg.observer) cfg.observer({round, beta_new, q_new, report.q});
      if (!improved) {
        // A converged concentration chain ends the round without counting
        // as a failure; anything else that does not improve does.
        if (first_step || !same_objective(q_new, report.q)) ++failed_rounds;
        break;
      }
      try {
        beta_new = ls_fit(data, std::span<const Index>(report.kept));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kRankDeficient) throw;
        ++failed_rounds;
        break;
      }
      ++report.ls_calls;
    }
    ++round;
  }

  report.ls_calls += refine_to_fixed_point(data, cfg.alpha, finalists, report);
  if (report.kept.empty()) report.kept = trim_state(data, report.beta, cfg.alpha).kept;
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace lst
