#include "lst_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "lst/error.hpp"

namespace lst::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string_view> cells = split(line);
    if (!have_header) {
      bool numeric = true;
      for (std::string_view c : cells) {
        if (c.empty()) parse_error(line_no, "empty column name");
        numeric = numeric && parse_number(c).has_value();
      }
      if (numeric) parse_error(line_no, "missing header row");
      for (std::string_view c : cells) table.header.emplace_back(c);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      parse_error(line_no, "expected " + std::to_string(table.header.size()) + " cells, found " +
                               std::to_string(cells.size()));
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const std::optional<double> v = parse_number(cells[k]);
      if (!v) parse_error(line_no, "column '" + table.header[k] + "': not a finite number: '" + std::string(cells[k]) + "'");
      values.push_back(*v);
    }
    ++rows;
  }
  if (!have_header) fail(ErrorCode::kParse, "empty input");
  if (rows == 0) fail(ErrorCode::kParse, "no data rows");

  const auto cols = static_cast<Index>(table.header.size());
  table.values.resize(static_cast<Index>(rows), cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) table.values(static_cast<Index>(r), c) = values[r * table.header.size() + c];
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return read_csv(in);
}

Dataset to_dataset(const CsvTable& table, const std::optional<std::string>& y_col) {
  const auto cols = static_cast<Index>(table.header.size());
  Index y = cols - 1;
  if (y_col) {
    y = -1;
    for (Index c = 0; c < cols; ++c) {
      if (table.header[static_cast<std::size_t>(c)] == *y_col) y = c;
    }
    if (y < 0) fail(ErrorCode::kParse, "no column named '" + *y_col + "'");
  }
  Eigen::MatrixXd carriers(table.values.rows(), cols - 1);
  for (Index c = 0, k = 0; c < cols; ++c) {
    if (c != y) carriers.col(k++) = table.values.col(c);
  }
  return Dataset(carriers, table.values.col(y));
}

void write_csv(std::ostream& out, const Dataset& data) {
  const Index p = data.p();
  for (Index c = 1; c < p; ++c) out << 'x' << c << ',';
  out << "y\n";
  for (Index i = 0; i < data.n(); ++i) {
    for (Index c = 1; c < p; ++c) out << format_double(data.design()(i, c)) << ',';
    out << format_double(data.response()(i)) << '\n';
  }
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace lst::cli
