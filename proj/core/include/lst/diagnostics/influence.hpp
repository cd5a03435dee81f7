#pragma once

#include "lst/dataset.hpp"
#include "lst/fit_report.hpp"
#include "lst/trimming.hpp"

namespace lst {

// z0 = (s0', t0)'
struct ContaminationPoint {
  Eigen::VectorXd s0;
  double t0 = 0.0;
};

// Influence of a point mass at z0 on the LST functional. With
// r0 = t0 - (1, s0')·beta: the zero vector when r0 lies outside
// [m - alpha·sigma, m + alpha·sigma] (boundary counts as inside), otherwise
// r0 · M^{-1} (1, s0')'. Throws kSingularMatrix when M is not invertible.
Eigen::VectorXd influence_function(const ContaminationPoint& z0, const Coefficients& beta, double m,
                                   double sigma, double alpha, const Eigen::MatrixXd& M);

// (1/n) sum over kept rows of w_i w_i'.
Eigen::MatrixXd kept_moment_matrix(const Dataset& data, const TrimState& state);

// Plug-in influence function: m, sigma and M taken from the trimming at
// fit.beta.
Eigen::VectorXd empirical_if(const Dataset& data, double alpha, const ContaminationPoint& z0,
                             const FitReport& fit);

}  // namespace lst
