#include "lst/aa1.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/refine.hpp"
#include "lst/sampling.hpp"
#include "lst/trimming.hpp"

namespace lst {
namespace {

struct IndexListHash {
  std::size_t operator()(const std::vector<Index>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Index i : v) {
      h ^= static_cast<std::uint64_t>(i);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

constexpr int kMaxConsecutiveSkips = 50;

// Breaks exact ties between carrier rows so that every pair can produce a
// finite slope. Only the copy used for slope construction is touched.
void perturb_duplicate_rows(Eigen::MatrixXd& carriers, Rng& rng) {
  const Index n = carriers.rows();
  Eigen::VectorXd scale(carriers.cols());
  for (Index c = 0; c < carriers.cols(); ++c) {
    scale(c) = std::max(1.0, carriers.col(c).cwiseAbs().maxCoeff());
  }
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (Index i = 1; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      if (carriers.row(i) == carriers.row(j)) {
        for (Index c = 0; c < carriers.cols(); ++c) {
          carriers(i, c) += 1e-8 * scale(c) * jitter(rng);
        }
        break;
      }
    }
  }
}

void validate(const Dataset& data, const Aa1Config& cfg) {
  if (!(cfg.alpha >= 1.0)) fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
  if (cfg.t_ls_budget < 1) fail(ErrorCode::kInvalidArgument, "t_ls_budget must be >= 1");
  if (!(cfg.delta_factor > 0.0)) fail(ErrorCode::kInvalidArgument, "delta factor must be positive");
  if (data.n() < data.p() + 1) fail(ErrorCode::kDegenerateDesign, "AA1 needs n >= p + 1");
  if (!design_rank_ok(data)) fail(ErrorCode::kDegenerateDesign, "design is rank deficient");
}

}  // namespace

FitReport lst_fit_location(const Dataset& data, double alpha, Method method, std::uint64_t seed) {
  const auto started = std::chrono::steady_clock::now();
  if (data.p() != 1) fail(ErrorCode::kUnsupportedDimension, "location search needs p == 1");

  std::vector<double> ys(data.response().data(), data.response().data() + data.n());
  std::sort(ys.begin(), ys.end());
  std::vector<double> candidates;
  candidates.reserve(2 * ys.size());
  for (std::size_t k = 0; k < ys.size(); ++k) {
    candidates.push_back(ys[k]);
    if (k + 1 < ys.size() && ys[k + 1] != ys[k]) candidates.push_back(0.5 * (ys[k] + ys[k + 1]));
  }

  FitReport report;
  report.method = method;
  report.seed = seed;
  report.alpha = alpha;
  report.q = std::numeric_limits<double>::infinity();
  Coefficients cur(1);
  for (double c : candidates) {
    ++report.draws;
    cur(0) = c;
    TrimState state = trim_state(data, cur, alpha);
    double q_cur = kept_sum_of_squares(state);
    for (int step = 0; step < 100; ++step) {
      Coefficients next(1);
      double sum = 0.0;
      for (Index i : state.kept) sum += data.response()(i);
      next(0) = sum / static_cast<double>(state.kept.size());
      ++report.ls_calls;
      TrimState next_state = trim_state(data, next, alpha);
      const double q_next = kept_sum_of_squares(next_state);
      if (!(q_next < q_cur)) break;
      cur = next;
      q_cur = q_next;
      state = std::move(next_state);
    }
    if (q_cur < report.q) {
      report.q = q_cur;
      report.beta = cur;
      report.kept = state.kept;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

FitReport lst_fit_aa1(const Dataset& data, const Aa1Config& cfg) {
  if (data.p() == 1) {
    if (!(cfg.alpha >= 1.0)) fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
    return lst_fit_location(data, cfg.alpha, Method::kLstAa1, cfg.seed);
  }
  const auto started = std::chrono::steady_clock::now();
  validate(data, cfg);

  const Index n = data.n();
  const Index p = data.p();
  const Eigen::VectorXd& y = data.response();
  Eigen::MatrixXd carriers = data.carriers();

  Rng rng(cfg.seed);
  std::uniform_int_distribution<Index> first(0, n - 1);
  std::uniform_int_distribution<Index> second(0, n - 2);

  std::unordered_set<std::vector<Index>, IndexListHash> seen_regions;
  FitReport report;
  report.method = Method::kLstAa1;
  report.seed = cfg.seed;
  report.alpha = cfg.alpha;
  report.q = std::numeric_limits<double>::infinity();

  int consecutive_skips = 0;
  bool perturbed = false;
  bool budget_spent = false;
  Coefficients candidate(p);
  FinalistPool finalists(cfg.refine_finalists);

  while (!budget_spent && report.draws < cfg.max_pair_draws) {
    const Index i = first(rng);
    Index j = second(rng);
    if (j >= i) ++j;
    const std::size_t round = report.draws++;

    Index k = 0;
    double widest = 0.0;
    for (Index c = 0; c < p - 1; ++c) {
      const double gap = std::abs(carriers(i, c) - carriers(j, c));
      if (gap > widest) {
        widest = gap;
        k = c;
      }
    }
    if (widest == 0.0) {
      if (++consecutive_skips >= kMaxConsecutiveSkips) {
        if (perturbed) fail(ErrorCode::kNoValidPairs, "no pair with distinct carriers found");
        perturb_duplicate_rows(carriers, rng);
        perturbed = true;
        consecutive_skips = 0;
      }
      continue;
    }
    consecutive_skips = 0;

    const double slope = (y(i) - y(j)) / (carriers(i, k) - carriers(j, k));
    for (double intercept : {0.0, 1.0}) {
      Coefficients boundary = Coefficients::Zero(p);
      boundary(0) = intercept;
      boundary(k + 1) = slope;
      for (Index l = 0; l < p && !budget_spent; ++l) {
        const double delta = cfg.delta_factor * std::max(1.0, std::abs(boundary(l)));
        for (double sign : {1.0, -1.0}) {
          candidate = boundary;
          candidate(l) += sign * delta;
          const TrimState state = trim_state(data, candidate, cfg.alpha);
          if (!region_signature(state, TiePolicy::kIgnoreCentralPair)) continue;
          if (!seen_regions.insert(state.kept).second) continue;

          Coefficients refit;
          try {
            refit = ls_fit(data, std::span<const Index>(state.kept));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kRankDeficient) throw;
            continue;
          }
          ++report.ls_calls;
          TrimState refit_state = trim_state(data, refit, cfg.alpha);
          const double q = kept_sum_of_squares(refit_state);
          finalists.offer(q, refit);
          if (q < report.q) {
            report.q = q;
            report.beta = refit;
            report.kept = std::move(refit_state.kept);
          }
          if (cfg.observer) cfg.observer({round, refit, q, report.q});
          if (report.ls_calls >= cfg.t_ls_budget) {
            budget_spent = true;
            break;
          }
        }
      }
      if (budget_spent) break;
    }
  }

  if (report.ls_calls == 0) {
    // Every candidate sat on a region boundary; fall back to the full LS fit.
    report.beta = ls_fit(data);
    ++report.ls_calls;
    TrimState state = trim_state(data, report.beta, cfg.alpha);
    report.q = kept_sum_of_squares(state);
    report.kept = std::move(state.kept);
    finalists.offer(report.q, report.beta);
  }
  report.ls_calls += refine_to_fixed_point(data, cfg.alpha, finalists, report);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace lst
