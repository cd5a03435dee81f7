#pragma once

#include "lst/fit_report.hpp"

namespace lst {

// Deterministic brute-force LST reference for p <= 2 and n <= 30.
//
// p == 1: Q over every y_i, every pairwise midpoint and a 2001-point grid on
// [min y, max y].
// p == 2: the line is parameterized by its fitted values at the rows with the
// smallest and the largest carrier, which makes the grid (and hence the
// result) equivariant under shifts, scalings and affine carrier maps. The
// grid is 200 x 200 over LS fitted values +- 10 s (s the LS residual scale),
// then refined twice around the incumbent with a 10x smaller box.
FitReport lst_oracle(const Dataset& data, double alpha);

}  // namespace lst
