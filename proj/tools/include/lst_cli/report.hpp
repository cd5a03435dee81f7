#pragma once

#include <string>

#include "json.hpp"

#include "lst/bench/harness.hpp"
#include "lst/fit_report.hpp"

namespace lst::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lst-regress/1";

// Timing lives only under keys named "elapsed_seconds"; everything else is a
// pure function of the inputs and seeds.
Json fit_report_json(const FitReport& report);
Json bench_table_json(const BenchTable& table);

// "coefficient,value" rows followed by q.
std::string fit_report_csv(const FitReport& report);
std::string fit_report_text(const FitReport& report);

// One row, one "(emse, seconds)" cell per estimator.
std::string bench_table_text(const BenchTable& table);

// Copy of `doc` with every "elapsed_seconds" member removed.
Json strip_timing(const Json& doc);

}  // namespace lst::cli
