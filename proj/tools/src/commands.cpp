#include "lst_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lst/bench/harness.hpp"
#include "lst/diagnostics/breakdown.hpp"
#include "lst/estimator.hpp"
#include "lst_cli/csv.hpp"
#include "lst_cli/report.hpp"
#include "lst_cli/svg.hpp"

namespace lst::cli {
namespace {

struct FitOptions {
  std::string method = "lst-aa1";
  double alpha = 1.0;
  std::optional<Index> h;
  std::uint64_t seed = 0;
  std::size_t t_ls_budget = 300;
  std::optional<std::size_t> n_starts;
  std::size_t refine = 20;
};

struct ScenarioOptions {
  std::string kind = "clean-gaussian";
  Index n = 100;
  Index p = 5;
  double rho = 0.9;
  double eps = 0.0;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::string reference = "zero";
};

void add_fit_options(CLI::App& cmd, FitOptions& o) {
  cmd.add_option("--method", o.method, "ls | lst-aa1 | lst-aa2 | lst-oracle | lts")->capture_default_str();
  cmd.add_option("--alpha", o.alpha, "depth trimming threshold (>= 1)")->capture_default_str();
  cmd.add_option("--h", o.h, "LTS coverage (default floor((n+p+1)/2))");
  cmd.add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd.add_option("--t-ls-budget", o.t_ls_budget, "lst-aa1 least-squares budget")->capture_default_str();
  cmd.add_option("--n-starts", o.n_starts, "lst-aa2 / lts number of starts");
  cmd.add_option("--refine", o.refine, "lst-aa1 / lst-aa2 finalists followed to a fixed point (0: off)")
      ->capture_default_str();
}

void add_scenario_options(CLI::App& cmd, ScenarioOptions& o, bool with_reps) {
  cmd.add_option("--scenario", o.kind, "clean-gaussian | correlated | correlated-contaminated | noiseless")
      ->capture_default_str();
  cmd.add_option("--n", o.n, "observations")->capture_default_str();
  cmd.add_option("--p", o.p, "coefficients including the intercept")->capture_default_str();
  cmd.add_option("--rho", o.rho, "equicorrelation (correlated scenarios)")->capture_default_str();
  cmd.add_option("--eps", o.eps, "contamination fraction in [0, 0.5)")->capture_default_str();
  cmd.add_option("--seed", o.seed, "master seed")->capture_default_str();
  if (with_reps) {
    cmd.add_option("--reps", o.reps, "replications")->capture_default_str();
    cmd.add_option("--alpha", o.alpha, "LST alpha (default 1 clean, 3 contaminated)");
    cmd.add_option("--reference", o.reference, "EMSE reference: zero | population")->capture_default_str();
  }
}

Method method_or_throw(const std::string& tag) {
  const std::optional<Method> m = parse_method(tag);
  if (!m) fail(ErrorCode::kInvalidArgument, "unknown method '" + tag + "'");
  return *m;
}

EstimatorSpec to_spec(const FitOptions& o) {
  EstimatorSpec spec;
  spec.method = method_or_throw(o.method);
  spec.alpha = o.alpha;
  spec.h = o.h;
  spec.seed = o.seed;
  spec.t_ls_budget = o.t_ls_budget;
  spec.n_starts = o.n_starts;
  spec.refine_finalists = o.refine;
  return spec;
}

Scenario to_scenario(const ScenarioOptions& o) {
  Scenario s;
  const std::optional<ScenarioKind> kind = parse_scenario_kind(o.kind);
  if (!kind) fail(ErrorCode::kInvalidArgument, "unknown scenario '" + o.kind + "'");
  s.kind = *kind;
  s.n = o.n;
  s.p = o.p;
  s.rho = o.rho;
  s.eps = o.eps;
  s.reps = o.reps;
  s.master_seed = o.seed;
  s.alpha = o.alpha;
  if (o.reference == "zero") {
    s.reference = EmseReference::kZero;
  } else if (o.reference == "population") {
    s.reference = EmseReference::kPopulation;
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown reference '" + o.reference + "'");
  }
  return s;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double_or_throw(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(ErrorCode::kInvalidArgument, "not a number: '" + s + "'");
  return v;
}

// Writes to `path` when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << text;
}

Dataset load(const std::string& path, const std::optional<std::string>& y_col) {
  return to_dataset(read_csv_file(path), y_col);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kEmptyInput:
      return kExitMalformedInput;
    case ErrorCode::kRankDeficient:
    case ErrorCode::kDegenerateDesign:
    case ErrorCode::kNoValidPairs:
    case ErrorCode::kTooManySingularDraws:
    case ErrorCode::kSingularMatrix:
      return kExitRankDeficient;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnsupportedDimension:
      return kExitConfig;
  }
  return kExitConfig;
}

unsigned thread_count() {
  if (const char* env = std::getenv("LST_THREADS")) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust linear regression by least sum of squares of trimmed residuals", "lst"};
  // "--h" is the LTS coverage option, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 ok, 2 malformed input, 3 rank-deficient or degenerate data,\n"
      "4 invalid configuration, 5 plot requested for data without exactly one carrier.");

  // fit
  std::string fit_input;
  std::string fit_out;
  std::string fit_format = "json";
  std::optional<std::string> fit_y_col;
  FitOptions fit_opts;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit one estimator to a CSV file");
  fit_cmd->add_option("input", fit_input, "CSV with header; last column is the response")->required();
  add_fit_options(*fit_cmd, fit_opts);
  fit_cmd->add_option("--format", fit_format, "json | csv | table")->capture_default_str();
  fit_cmd->add_option("--y-col", fit_y_col, "response column name");
  fit_cmd->add_option("--out", fit_out, "output file (default: standard output)");

  // bench
  ScenarioOptions bench_opts;
  std::string bench_methods = "lst-aa1,lst-aa2";
  std::string bench_json;
  std::string bench_format = "table";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Monte Carlo EMSE and timing table");
  add_scenario_options(*bench_cmd, bench_opts, true);
  bench_cmd->add_option("--methods", bench_methods, "comma-separated method tags")->capture_default_str();
  bench_cmd->add_option("--json", bench_json, "also write the JSON report to this file");
  bench_cmd->add_option("--format", bench_format, "table | json (standard output)")->capture_default_str();
  bench_cmd->footer(
      "Clean Gaussian row (n=100, p=5, 1000 replications):\n"
      "  lst bench --scenario clean-gaussian --n 100 --p 5 --reps 1000 --methods lst-aa1,lst-aa2\n"
      "Contaminated correlated row (n=200, p=5, 10% outliers):\n"
      "  lst bench --scenario correlated-contaminated --n 200 --p 5 --eps 0.1 --methods lst-aa1,lts\n"
      "Worker threads: LST_THREADS (default: all cores). Results do not depend on it.");

  // probe-breakdown
  std::string probe_input;
  bool probe_gen = false;
  Index probe_n = 50;
  Index probe_p = 3;
  std::uint64_t probe_data_seed = 0;
  Index probe_m = 0;
  std::string probe_magnitudes = "1e2,1e3,1e4,1e5,1e6";
  std::string probe_response = "tilt";
  std::string probe_out;
  std::optional<std::string> probe_y_col;
  FitOptions probe_opts;
  CLI::App* probe_cmd = app.add_subcommand("probe-breakdown", "Deviation of a fit under growing leverage outliers");
  probe_cmd->add_option("input", probe_input, "CSV data (or use --gen)");
  probe_cmd->add_flag("--gen", probe_gen, "use clean Gaussian data of size --n x --p");
  probe_cmd->add_option("--n", probe_n, "generated observations")->capture_default_str();
  probe_cmd->add_option("--p", probe_p, "generated coefficients")->capture_default_str();
  probe_cmd->add_option("--data-seed", probe_data_seed, "generator seed")->capture_default_str();
  probe_cmd->add_option("--m-contam", probe_m, "rows replaced by outliers")->required();
  probe_cmd->add_option("--magnitudes", probe_magnitudes, "comma-separated outlier magnitudes")
      ->capture_default_str();
  probe_cmd->add_option("--response", probe_response, "tilt (y=-M^2) | fixed-slope (y=-M)")->capture_default_str();
  probe_cmd->add_option("--y-col", probe_y_col, "response column name");
  probe_cmd->add_option("--out", probe_out, "output CSV (default: standard output)");
  add_fit_options(*probe_cmd, probe_opts);

  // plot
  std::string plot_input;
  std::string plot_methods;
  std::string plot_fits;
  std::string plot_out;
  std::optional<std::string> plot_y_col;
  FitOptions plot_opts;
  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG scatter plot with fitted lines (one carrier only)");
  plot_cmd->add_option("input", plot_input, "CSV with two columns")->required();
  plot_cmd->add_option("--methods", plot_methods, "comma-separated method tags to fit and draw");
  plot_cmd->add_option("--fits", plot_fits, "explicit lines 'b0,b1;b0,b1;...'");
  plot_cmd->add_option("--y-col", plot_y_col, "response column name");
  plot_cmd->add_option("--out", plot_out, "SVG file (default: standard output)");
  plot_cmd->add_option("--alpha", plot_opts.alpha, "LST alpha")->capture_default_str();
  plot_cmd->add_option("--seed", plot_opts.seed, "random seed")->capture_default_str();

  // gen
  ScenarioOptions gen_opts;
  std::string gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write one simulated data set as CSV");
  add_scenario_options(*gen_cmd, gen_opts, false);
  gen_cmd->add_option("--out", gen_out, "output CSV (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*fit_cmd) {
      if (fit_format != "json" && fit_format != "csv" && fit_format != "table") {
        fail(ErrorCode::kInvalidArgument, "unknown format '" + fit_format + "'");
      }
      const EstimatorSpec spec = to_spec(fit_opts);
      const Dataset data = load(fit_input, fit_y_col);
      const FitReport report = fit(data, spec);
      std::string text;
      if (fit_format == "json") {
        text = fit_report_json(report).dump(2) + "\n";
      } else if (fit_format == "csv") {
        text = fit_report_csv(report);
      } else {
        text = fit_report_text(report);
      }
      emit(text, fit_out, out);
      return kExitOk;
    }

    if (*bench_cmd) {
      if (bench_format != "table" && bench_format != "json") {
        fail(ErrorCode::kInvalidArgument, "unknown format '" + bench_format + "'");
      }
      Scenario scenario = to_scenario(bench_opts);
      for (const std::string& tag : split_list(bench_methods, ',')) {
        EstimatorSpec spec;
        spec.method = method_or_throw(tag);
        scenario.estimators.push_back(spec);
      }
      const BenchTable table = run_benchmark(scenario, thread_count());
      for (const std::string& w : table.warnings) err << "warning: " << w << '\n';
      const std::string json = bench_table_json(table).dump(2) + "\n";
      if (!bench_json.empty()) emit(json, bench_json, out);
      out << (bench_format == "json" ? json : bench_table_text(table));
      return kExitOk;
    }

    if (*probe_cmd) {
      const EstimatorSpec spec = to_spec(probe_opts);
      std::optional<Dataset> data;
      if (probe_gen == !probe_input.empty()) fail(ErrorCode::kInvalidArgument, "give either an input file or --gen");
      if (probe_gen) {
        Scenario s;
        s.n = probe_n;
        s.p = probe_p;
        s.master_seed = probe_data_seed;
        validate_generator(s);
        data = generate_replication(s, 0);
      } else {
        data = load(probe_input, probe_y_col);
      }
      std::vector<double> magnitudes;
      for (const std::string& m : split_list(probe_magnitudes, ',')) magnitudes.push_back(parse_double_or_throw(m));
      ProbeGeometry geometry;
      if (probe_response == "tilt") {
        geometry.response = ProbeResponse::kTilt;
      } else if (probe_response == "fixed-slope") {
        geometry.response = ProbeResponse::kFixedSlope;
      } else {
        fail(ErrorCode::kInvalidArgument, "unknown response '" + probe_response + "'");
      }
      const std::vector<ProbePoint> curve = breakdown_probe(*data, spec, probe_m, magnitudes, geometry);
      std::string text = "magnitude,deviation\n";
      for (const ProbePoint& pt : curve) text += format_double(pt.magnitude) + "," + format_double(pt.deviation) + "\n";
      emit(text, probe_out, out);
      return kExitOk;
    }

    if (*plot_cmd) {
      const Dataset data = load(plot_input, plot_y_col);
      if (data.p() != 2) {
        err << "error: plot needs exactly one carrier column, found " << data.p() - 1 << '\n';
        return kExitPlotDimension;
      }
      std::vector<PlotLine> lines;
      for (const std::string& tag : split_list(plot_methods, ',')) {
        FitOptions o = plot_opts;
        o.method = tag;
        lines.push_back({tag, fit(data, to_spec(o)).beta});
      }
      std::size_t k = 0;
      for (const std::string& item : split_list(plot_fits, ';')) {
        const std::vector<std::string> parts = split_list(item, ',');
        if (parts.size() != 2) fail(ErrorCode::kInvalidArgument, "each fit needs 'b0,b1': '" + item + "'");
        Coefficients b(2);
        b << parse_double_or_throw(parts[0]), parse_double_or_throw(parts[1]);
        lines.push_back({"fit" + std::to_string(++k), b});
      }
      emit(render_svg(data, lines), plot_out, out);
      return kExitOk;
    }

    if (*gen_cmd) {
      const Scenario scenario = to_scenario(gen_opts);
      validate_generator(scenario);
      std::ostringstream csv;
      write_csv(csv, generate_replication(scenario, 0));
      emit(csv.str(), gen_out, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitConfig;
}

}  // namespace lst::cli
