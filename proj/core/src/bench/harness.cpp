#include "lst/bench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "lst/bench/emse.hpp"
#include "lst/bench/generators.hpp"
#include "lst/diagnostics/breakdown.hpp"
#include "lst/error.hpp"
#include "lst/sampling.hpp"

namespace lst {
namespace {

struct Cell {
  std::optional<Coefficients> estimate;
  std::chrono::nanoseconds elapsed{0};
};

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kCleanGaussian: return "clean-gaussian";
    case ScenarioKind::kCorrelated: return "correlated";
    case ScenarioKind::kCorrelatedContaminated: return "correlated-contaminated";
    case ScenarioKind::kNoiseless: return "noiseless";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view tag) {
  for (ScenarioKind k : {ScenarioKind::kCleanGaussian, ScenarioKind::kCorrelated,
                         ScenarioKind::kCorrelatedContaminated, ScenarioKind::kNoiseless}) {
    if (to_string(k) == tag) return k;
  }
  return std::nullopt;
}

double scenario_alpha(const Scenario& scenario) {
  return scenario.alpha.value_or(scenario.eps > 0.0 ? 3.0 : 1.0);
}

Coefficients scenario_beta0(const Scenario& scenario) {
  const bool correlated = scenario.kind == ScenarioKind::kCorrelated ||
                          scenario.kind == ScenarioKind::kCorrelatedContaminated;
  if (scenario.reference == EmseReference::kPopulation && correlated) {
    return correlated_population_beta(scenario.p, scenario.rho);
  }
  return Coefficients::Zero(scenario.p);
}

std::vector<std::string> validate_generator(const Scenario& scenario) {
  if (scenario.p < 1) fail(ErrorCode::kInvalidArgument, "p must be >= 1");
  if (scenario.n <= scenario.p) fail(ErrorCode::kInvalidArgument, "n must exceed p");
  if (scenario.reps < 1) fail(ErrorCode::kInvalidArgument, "reps must be >= 1");
  if (!(scenario.eps >= 0.0 && scenario.eps < 0.5)) fail(ErrorCode::kInvalidArgument, "eps must lie in [0, 0.5)");
  if (scenario.kind == ScenarioKind::kCorrelatedContaminated && scenario.eps == 0.0) {
    fail(ErrorCode::kInvalidArgument, "correlated-contaminated needs eps > 0");
  }
  const double alpha = scenario_alpha(scenario);
  if (!(alpha >= 1.0)) fail(ErrorCode::kInvalidArgument, "alpha must be >= 1");
  const bool correlated = scenario.kind == ScenarioKind::kCorrelated ||
                          scenario.kind == ScenarioKind::kCorrelatedContaminated;
  if (correlated) {
    const double lower = scenario.p > 1 ? -1.0 / static_cast<double>(scenario.p - 1) : -1.0;
    if (!(scenario.rho > lower && scenario.rho < 1.0)) fail(ErrorCode::kInvalidArgument, "rho out of range");
  }

  std::vector<std::string> warnings;
  if (scenario.eps > 0.0 && scenario.n > 2 * scenario.p + 1) {
    const Rational bp = rbp(scenario.n, scenario.p);
    if (contamination_count(scenario.n, scenario.eps) >= bp.num) {
      warnings.push_back("contaminated rows reach the breakdown point " + std::to_string(bp.num) + "/" +
                         std::to_string(bp.den));
    }
  }
  return warnings;
}

std::vector<std::string> validate_scenario(const Scenario& scenario) {
  std::vector<std::string> warnings = validate_generator(scenario);
  if (scenario.estimators.empty()) fail(ErrorCode::kInvalidArgument, "no estimators configured");
  return warnings;
}

std::uint64_t replication_seed(const Scenario& scenario, std::size_t rep) {
  return derive_seed(scenario.master_seed, rep);
}

Dataset generate_replication(const Scenario& scenario, std::size_t rep) {
  const std::uint64_t seed = replication_seed(scenario, rep);
  Dataset data = [&] {
    switch (scenario.kind) {
      case ScenarioKind::kCorrelated:
      case ScenarioKind::kCorrelatedContaminated:
        return gen_correlated(scenario.n, scenario.p, scenario.rho, derive_seed(seed, 0));
      case ScenarioKind::kNoiseless: {
        const Dataset base = gen_clean_gaussian(scenario.n, scenario.p, derive_seed(seed, 0));
        return Dataset(base.carriers(), Eigen::VectorXd::Zero(scenario.n));
      }
      case ScenarioKind::kCleanGaussian:
      default:
        return gen_clean_gaussian(scenario.n, scenario.p, derive_seed(seed, 0));
    }
  }();
  if (scenario.eps > 0.0) data = contaminate(data, scenario.eps, derive_seed(seed, 1));
  return data;
}

BenchTable run_benchmark(const Scenario& scenario, unsigned threads) {
  BenchTable table;
  table.warnings = validate_scenario(scenario);
  table.scenario = scenario;
  table.alpha = scenario_alpha(scenario);
  table.beta0 = scenario_beta0(scenario);

  const std::size_t reps = scenario.reps;
  const std::size_t methods = scenario.estimators.size();
  table.rep_seeds.resize(reps);
  for (std::size_t r = 0; r < reps; ++r) table.rep_seeds[r] = replication_seed(scenario, r);

  std::vector<Cell> cells(reps * methods);
  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;
  std::atomic<bool> aborted{false};

  auto worker = [&] {
    for (std::size_t r = next++; r < reps && !aborted; r = next++) {
      try {
        const Dataset data = generate_replication(scenario, r);
        for (std::size_t m = 0; m < methods; ++m) {
          EstimatorSpec spec = scenario.estimators[m];
          spec.alpha = table.alpha;
          spec.seed = derive_seed(table.rep_seeds[r], 2 + m);
          Cell& cell = cells[r * methods + m];
          const auto started = std::chrono::steady_clock::now();
          try {
            cell.estimate = fit(data, spec).beta;
          } catch (const Error&) {
            cell.estimate.reset();
          }
          cell.elapsed = std::chrono::steady_clock::now() - started;
        }
      } catch (...) {
        aborted = true;
        const std::lock_guard<std::mutex> lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  for (std::size_t m = 0; m < methods; ++m) {
    EstimatorSummary row;
    row.method = scenario.estimators[m].method;
    for (std::size_t r = 0; r < reps; ++r) {
      const Cell& cell = cells[r * methods + m];
      row.total_elapsed += cell.elapsed;
      if (cell.estimate) {
        row.estimates.push_back(*cell.estimate);
      } else {
        row.failed_reps.push_back(r);
      }
    }
    row.emse = row.estimates.empty() ? std::nan("") : emse(row.estimates, table.beta0);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace lst
