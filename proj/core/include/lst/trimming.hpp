#pragma once

#include <optional>
#include <vector>

#include "lst/dataset.hpp"

namespace lst {

// r_i = y_i - (1, x_i')·beta. Throws kDimensionMismatch if beta.size() != p.
Eigen::VectorXd compute_residuals(const Dataset& data, const Coefficients& beta);

// Snapshot of the depth trimming of one residual vector.
//
// Invariants:
//   depths[i] == |residuals[i] - m| / sigma
//   kept == { i : depths[i] <= alpha } in ascending order
//   sigma > 0; sigma_degenerate implies sigma == 1 (the raw MAD was zero,
//   i.e. a majority of residuals coincide with the median)
struct TrimState {
  Eigen::VectorXd residuals;
  double m = 0.0;
  double sigma = 1.0;
  bool sigma_degenerate = false;
  Eigen::VectorXd depths;
  std::vector<Index> kept;
  double alpha = 1.0;
};

TrimState trim_residuals(Eigen::VectorXd residuals, double alpha);
TrimState trim_state(const Dataset& data, const Coefficients& beta, double alpha);

struct ObjectiveValue {
  double q = 0.0;
  Index kept_count = 0;
};

// Sum of squared residuals whose depth does not exceed alpha.
ObjectiveValue objective_q(const Dataset& data, const Coefficients& beta, double alpha);
double kept_sum_of_squares(const TrimState& state);

// Kept indices ordered by strictly increasing depth. Identifies the region of
// coefficient space that shares this kept set and depth ordering.
enum class TiePolicy {
  kStrict,
  // With an even number of residuals the median is the midpoint of the two
  // central ones, so their depths coincide for every beta. That tie carries no
  // boundary information and is skipped under this policy.
  kIgnoreCentralPair,
};

class RegionSignature {
 public:
  const std::vector<Index>& order() const { return order_; }
  friend bool operator==(const RegionSignature&, const RegionSignature&) = default;

 private:
  friend std::optional<RegionSignature> region_signature(const TrimState& state, TiePolicy policy);
  explicit RegionSignature(std::vector<Index> order) : order_(std::move(order)) {}

  std::vector<Index> order_;
};

// Two depths tie when |d_i - d_j| <= kDepthTieTolerance * max(1, d_i, d_j).
inline constexpr double kDepthTieTolerance = 1e-12;

// std::nullopt when two kept depths tie (the candidate sits on a region
// boundary).
std::optional<RegionSignature> region_signature(const TrimState& state,
                                                TiePolicy policy = TiePolicy::kStrict);

// True iff the n x p design (with intercept column) has numerical rank p.
bool design_rank_ok(const Dataset& data);

}  // namespace lst
