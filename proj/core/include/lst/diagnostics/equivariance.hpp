#pragma once

#include "lst/dataset.hpp"

namespace lst {

// y_i -> y_i + w_i'b
Dataset shift_response(const Dataset& data, const Coefficients& b);

// y_i -> s·y_i
Dataset scale_response(const Dataset& data, double s);

// w_i -> A'w_i. A must be nonsingular and keep the intercept coordinate:
// first column equal to e_1, so that (A'w)_1 == 1.
Dataset affine_carriers(const Dataset& data, const Eigen::MatrixXd& A);

}  // namespace lst
