#include "lst_cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lst_cli/csv.hpp"

namespace lst::cli {
namespace {

double seconds(std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); }

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

std::string to_string(EmseReference ref) { return ref == EmseReference::kZero ? "zero" : "population"; }

}  // namespace

Json fit_report_json(const FitReport& report) {
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "fit";
  doc["method"] = std::string(to_string(report.method));
  if (is_lst(report.method)) doc["alpha"] = report.alpha;
  if (report.method == Method::kLts) doc["h"] = report.h;
  doc["beta"] = vector_json(report.beta);
  doc["q"] = report.q;
  doc["kept_count"] = report.kept.size();
  doc["kept"] = report.kept;
  doc["ls_calls"] = report.ls_calls;
  doc["draws"] = report.draws;
  doc["seed"] = report.seed;
  doc["elapsed_seconds"] = seconds(report.elapsed);
  return doc;
}

Json bench_table_json(const BenchTable& table) {
  const Scenario& s = table.scenario;
  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "bench";
  Json scenario;
  scenario["kind"] = std::string(to_string(s.kind));
  scenario["n"] = s.n;
  scenario["p"] = s.p;
  if (s.kind == ScenarioKind::kCorrelated || s.kind == ScenarioKind::kCorrelatedContaminated) scenario["rho"] = s.rho;
  scenario["eps"] = s.eps;
  scenario["reps"] = s.reps;
  scenario["seed"] = s.master_seed;
  scenario["alpha"] = table.alpha;
  scenario["reference"] = to_string(s.reference);
  doc["scenario"] = scenario;
  doc["beta0"] = vector_json(table.beta0);
  doc["warnings"] = table.warnings;
  Json rows = Json::array();
  for (const EstimatorSummary& row : table.rows) {
    Json r;
    r["method"] = std::string(to_string(row.method));
    r["emse"] = row.emse;
    r["failed_reps"] = row.failed_reps;
    r["elapsed_seconds"] = seconds(row.total_elapsed);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["rep_seeds"] = table.rep_seeds;
  return doc;
}

std::string fit_report_csv(const FitReport& report) {
  std::ostringstream out;
  out << "coefficient,value\n";
  for (Index i = 0; i < report.beta.size(); ++i) out << 'b' << i << ',' << format_double(report.beta(i)) << '\n';
  out << "q," << format_double(report.q) << '\n';
  return out.str();
}

std::string fit_report_text(const FitReport& report) {
  std::ostringstream out;
  char buf[96];
  out << "method  " << to_string(report.method) << '\n';
  for (Index i = 0; i < report.beta.size(); ++i) {
    std::snprintf(buf, sizeof buf, "b%-6td %.10g\n", static_cast<std::ptrdiff_t>(i), report.beta(i));
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "q       %.10g\nkept    %zu\n", report.q, report.kept.size());
  out << buf;
  return out.str();
}

std::string bench_table_text(const BenchTable& table) {
  const Scenario& s = table.scenario;
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s  reps=%zu  alpha=%g  eps=%g  seed=%llu\n", std::string(to_string(s.kind)).c_str(),
                s.reps, table.alpha, s.eps, static_cast<unsigned long long>(s.master_seed));
  out << buf;
  std::snprintf(buf, sizeof buf, "%5s %3s", "n", "p");
  out << buf;
  for (const EstimatorSummary& row : table.rows) {
    std::snprintf(buf, sizeof buf, "  %-22s", std::string(to_string(row.method)).c_str());
    out << buf;
  }
  out << '\n';
  std::snprintf(buf, sizeof buf, "%5td %3td", static_cast<std::ptrdiff_t>(s.n), static_cast<std::ptrdiff_t>(s.p));
  out << buf;
  for (const EstimatorSummary& row : table.rows) {
    char cell[64];
    std::snprintf(cell, sizeof cell, "(%.4f, %.3f)", row.emse, seconds(row.total_elapsed));
    std::snprintf(buf, sizeof buf, "  %-22s", cell);
    out << buf;
  }
  out << '\n';
  for (const EstimatorSummary& row : table.rows) {
    if (!row.failed_reps.empty()) {
      out << "# " << to_string(row.method) << ": " << row.failed_reps.size() << " failed replications\n";
    }
  }
  return out.str();
}

Json strip_timing(const Json& doc) {
  if (doc.is_object()) {
    Json out = Json::object();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() != "elapsed_seconds") out[it.key()] = strip_timing(it.value());
    }
    return out;
  }
  if (doc.is_array()) {
    Json out = Json::array();
    for (const Json& v : doc) out.push_back(strip_timing(v));
    return out;
  }
  return doc;
}

}  // namespace lst::cli
