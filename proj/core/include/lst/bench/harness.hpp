#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lst/dataset.hpp"
#include "lst/estimator.hpp"

namespace lst {

enum class ScenarioKind {
  kCleanGaussian,
  kCorrelated,
  kCorrelatedContaminated,
  kNoiseless,  // standard normal carriers, y == 0: every exact method recovers 0
};

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view tag);

// What EMSE is measured against. kZero follows the convention of reporting
// against beta0 = 0 for every generator; kPopulation uses the population
// regression coefficients of the generator.
enum class EmseReference { kZero, kPopulation };

struct Scenario {
  ScenarioKind kind = ScenarioKind::kCleanGaussian;
  Index n = 100;
  Index p = 5;
  double rho = 0.9;
  double eps = 0.0;
  std::size_t reps = 100;
  std::uint64_t master_seed = 0;
  // Defaults to 1 on clean data and 3 when eps > 0.
  std::optional<double> alpha;
  EmseReference reference = EmseReference::kZero;
  // Seeds inside the specs are ignored; each replication derives its own.
  std::vector<EstimatorSpec> estimators;
};

double scenario_alpha(const Scenario& scenario);
Coefficients scenario_beta0(const Scenario& scenario);

// Throws kInvalidArgument on an unusable scenario; returns non-fatal
// warnings (e.g. contamination at or beyond the breakdown point).
std::vector<std::string> validate_scenario(const Scenario& scenario);
// validate_scenario() without the estimator list, for data generation only.
std::vector<std::string> validate_generator(const Scenario& scenario);

std::uint64_t replication_seed(const Scenario& scenario, std::size_t rep);
Dataset generate_replication(const Scenario& scenario, std::size_t rep);

struct EstimatorSummary {
  Method method = Method::kLs;
  double emse = 0.0;
  std::chrono::nanoseconds total_elapsed{0};
  std::vector<std::size_t> failed_reps;
  std::vector<Coefficients> estimates;  // successful replications, rep order
};

struct BenchTable {
  Scenario scenario;
  double alpha = 1.0;
  Coefficients beta0;
  std::vector<std::uint64_t> rep_seeds;
  std::vector<EstimatorSummary> rows;
  std::vector<std::string> warnings;
};

// Replications run on `threads` workers; aggregation happens in rep order
// afterwards, so everything except timings is independent of scheduling.
BenchTable run_benchmark(const Scenario& scenario, unsigned threads = 1);

}  // namespace lst
