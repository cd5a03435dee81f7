#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lst/dataset.hpp"

namespace lst::cli {

// Comma-separated numeric table with a required header row. Blank lines are
// ignored; surrounding spaces and a trailing '\r' are stripped from cells.
struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;
};

// Throws Error(kParse) naming the offending line.
CsvTable read_csv(std::istream& in);
// Throws Error(kInvalidArgument) when the file cannot be opened.
CsvTable read_csv_file(const std::string& path);

// The response is the last column unless y_col names another one; every
// other column becomes a carrier in file order.
Dataset to_dataset(const CsvTable& table, const std::optional<std::string>& y_col = std::nullopt);

// Header x1,...,x{p-1},y; values at 17 significant digits.
void write_csv(std::ostream& out, const Dataset& data);

// printf("%.17g"): parses back to the same double.
std::string format_double(double value);

}  // namespace lst::cli
