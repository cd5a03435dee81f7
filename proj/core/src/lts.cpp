#include "lst/lts.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/sampling.hpp"
#include "lst/trimming.hpp"

namespace lst {
namespace {

constexpr std::size_t kMaxSingularRedraws = 100;

struct Trial {
  Coefficients beta;
  double objective = std::numeric_limits<double>::infinity();
  std::vector<Index> subset;
};

// Indices of the h smallest squared residuals and their sum.
std::pair<std::vector<Index>, double> h_subset(const Dataset& data, const Coefficients& beta, Index h) {
  const Eigen::VectorXd sq = compute_residuals(data, beta).array().square();
  std::vector<Index> order(static_cast<std::size_t>(data.n()));
  std::iota(order.begin(), order.end(), Index{0});
  const auto cut = order.begin() + h;
  std::nth_element(order.begin(), cut - 1, order.end(),
                   [&](Index a, Index b) { return sq(a) < sq(b) || (sq(a) == sq(b) && a < b); });
  order.resize(static_cast<std::size_t>(h));
  double total = 0.0;
  for (Index i : order) total += sq(i);
  std::sort(order.begin(), order.end());
  return {std::move(order), total};
}

// One concentration step: LS on the current h-subset, re-select.
bool c_step(const Dataset& data, Trial& trial, Index h, std::size_t& ls_calls) {
  Coefficients refit;
  try {
    refit = ls_fit(data, std::span<const Index>(trial.subset));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRankDeficient) throw;
    return false;
  }
  ++ls_calls;
  auto [subset, objective] = h_subset(data, refit, h);
  if (!(objective < trial.objective)) return false;
  trial.beta = std::move(refit);
  trial.subset = std::move(subset);
  trial.objective = objective;
  return true;
}

}  // namespace

Index default_lts_h(Index n, Index p) { return (n + p + 1) / 2; }

double lts_objective(const Dataset& data, const Coefficients& beta, Index h) {
  if (h < 1 || h > data.n()) fail(ErrorCode::kInvalidArgument, "h out of range");
  return h_subset(data, beta, h).second;
}

FitReport lts_fit(const Dataset& data, const LtsConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const Index n = data.n();
  const Index p = data.p();
  const Index h = cfg.h.value_or(default_lts_h(n, p));
  if (h < n / 2 || h > n || h < p) {
    fail(ErrorCode::kInvalidArgument, "h = " + std::to_string(h) + " outside [max(n/2, p), n]");
  }
  if (cfg.n_starts < 1 || cfg.n_finalists < 1) fail(ErrorCode::kInvalidArgument, "need at least one start");
  if (!design_rank_ok(data)) fail(ErrorCode::kDegenerateDesign, "design is rank deficient");

  FitReport report;
  report.method = Method::kLts;
  report.seed = cfg.seed;
  report.h = h;

  Rng rng(cfg.seed);
  std::vector<Trial> trials;
  trials.reserve(cfg.n_starts);
  for (std::size_t start = 0; start < cfg.n_starts; ++start) {
    std::optional<Coefficients> elemental;
    for (std::size_t singular = 0; !elemental; ++singular) {
      if (singular >= kMaxSingularRedraws) {
        fail(ErrorCode::kDegenerateDesign, "too many consecutive singular elemental subsets");
      }
      elemental = elemental_fit(data, sample_without_replacement(rng, n, p));
      ++report.draws;
    }
    Trial trial;
    trial.beta = std::move(*elemental);
    std::tie(trial.subset, trial.objective) = h_subset(data, trial.beta, h);
    if (cfg.observer) cfg.observer({start, trial.beta, trial.objective, trial.objective});
    for (std::size_t s = 0; s < cfg.c_steps_initial; ++s) {
      if (!c_step(data, trial, h, report.ls_calls)) break;
      if (cfg.observer) cfg.observer({start, trial.beta, trial.objective, trial.objective});
    }
    trials.push_back(std::move(trial));
  }

  const std::size_t finalists = std::min(cfg.n_finalists, trials.size());
  std::partial_sort(trials.begin(), trials.begin() + static_cast<std::ptrdiff_t>(finalists), trials.end(),
                    [](const Trial& a, const Trial& b) { return a.objective < b.objective; });
  Trial* best = nullptr;
  for (std::size_t f = 0; f < finalists; ++f) {
    Trial& trial = trials[f];
    for (std::size_t s = 0; s < cfg.max_c_steps; ++s) {
      if (!c_step(data, trial, h, report.ls_calls)) break;
      if (cfg.observer) cfg.observer({cfg.n_starts + f, trial.beta, trial.objective, trial.objective});
    }
    if (best == nullptr || trial.objective < best->objective) best = &trial;
  }

  report.beta = best->beta;
  report.q = best->objective;
  report.kept = best->subset;
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace lst
