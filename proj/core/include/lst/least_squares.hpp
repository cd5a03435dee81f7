#pragma once

#include <optional>
#include <span>

#include "lst/dataset.hpp"

namespace lst {

// Ordinary least squares on the rows in `subset` (all rows when empty),
// solved with a column-pivoting Householder QR.
// Throws kRankDeficient when the selected design has numerical rank < p.
Coefficients ls_fit(const Dataset& data, std::optional<std::span<const Index>> subset = std::nullopt);

// Exact interpolating fit through p rows; std::nullopt when the p x p
// system is singular.
std::optional<Coefficients> elemental_fit(const Dataset& data, std::span<const Index> rows);

}  // namespace lst
