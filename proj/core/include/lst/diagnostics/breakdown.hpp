#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lst/dataset.hpp"
#include "lst/estimator.hpp"

namespace lst {

// Exact fraction, kept unreduced (4/10 stays 4/10); equality is by value.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

// Finite-sample replacement breakdown point of LST for data in general
// position: floor((n+1)/2)/n when p == 1, (floor(n/2) - p + 2)/n otherwise.
// Requires n > 2p + 1.
Rational rbp(Index n, Index p);

// Response placed on each contaminating row x = M * direction.
enum class ProbeResponse {
  kTilt,        // y = -M^2: the contaminating hyperplane steepens with M
  kFixedSlope,  // y = -M
};

struct ProbeGeometry {
  // Leverage direction in carrier space; defaults to the all-ones vector.
  std::optional<Eigen::VectorXd> direction;
  ProbeResponse response = ProbeResponse::kTilt;
};

struct ProbePoint {
  double magnitude = 0.0;
  double deviation = 0.0;
};

// Replaces the first m_contam rows by leverage points of growing magnitude,
// refits with the same estimator spec (same seed) and records
// ||beta_contaminated - beta_clean|| for each magnitude.
std::vector<ProbePoint> breakdown_probe(const Dataset& data, const EstimatorSpec& fitter, Index m_contam,
                                        std::span<const double> magnitudes, const ProbeGeometry& geometry = {});

}  // namespace lst
