#include "rlcband/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "rlcband/error.hpp"
#include "rlcband/format.hpp"
#include "rlcband/io.hpp"
#include "rlcband/transient_metrics.hpp"

namespace rlcband::cli {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  return out;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + dir.string() + "': " + ec.message());
}

std::optional<Trace> load_normalized_trace(const RunConfig& config) {
  if (!config.trace) return std::nullopt;
  return normalize(load_trace(*config.trace));
}

ResponseBand build_band(const SecondOrderParams& params, const RunConfig& config) {
  return step_response_band(
      params, default_grid(params.nominal, config.grid_points, config.t_end_multiplier));
}

class ReportWriter {
 public:
  ReportWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

  void section(const char* name) { out_ << '[' << name << "]\n"; }
  void point(const std::string& key, double value) {
    out_ << key << " = " << format_decimal(value, precision_) << '\n';
  }
  void interval(const std::string& key, const Interval& value) {
    out_ << key << " = " << to_report_string(value, precision_) << '\n';
  }

 private:
  std::ostream& out_;
  int precision_;
};

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  const CircuitSpec spec = load_circuit_spec(config.circuit);
  const SecondOrderParams params = derive_params(spec);
  const ResponseBand band = build_band(params, config);
  const std::filesystem::path dir = config.out_dir.value_or(".");
  ensure_directory(dir);
  {
    auto f = open_output(dir / "band.csv");
    write_band_csv(f, band);
  }
  {
    auto f = open_output(dir / "nominal.csv");
    write_nominal_csv(f, band);
  }
  out << "wrote " << band.size() << " grid points to " << (dir / "band.csv").string() << " and "
      << (dir / "nominal.csv").string() << '\n';
  return kOk;
}

int cmd_metrics(const RunConfig& config, std::ostream& out) {
  const CircuitSpec spec = load_circuit_spec(config.circuit);
  const auto trace = load_normalized_trace(config);
  write_metrics_report(out, spec, trace, config.grid_points, config.t_end_multiplier,
                       config.precision);
  if (config.out_dir) {
    ensure_directory(*config.out_dir);
    auto f = open_output(*config.out_dir / "metrics.txt");
    write_metrics_report(f, spec, trace, config.grid_points, config.t_end_multiplier,
                         config.precision);
  }
  return kOk;
}

int cmd_identify(const std::string& mp_text, const std::string& tp_text, int precision,
                 std::ostream& out) {
  const Interval mp = parse_interval(mp_text);
  const Interval tp = parse_interval(tp_text);
  const SecondOrderParams p = identify(mp, tp);
  ReportWriter w(out, precision);
  w.section("identified");
  w.interval("mp", mp);
  w.interval("tp", tp);
  w.interval("xi", p.xi);
  w.interval("omega_d", p.omegad);
  w.interval("omega_0", p.omega0);
  return kOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const CircuitSpec spec = load_circuit_spec(config.circuit);
  const Trace trace = normalize(load_trace(*config.trace));
  const SecondOrderParams params = derive_params(spec);
  const ResponseBand band = build_band(params, config);
  const EnclosureReport report = check_enclosure(trace, band);

  out << "trace = " << trace.label() << '\n';
  out << "total = " << report.total << '\n';
  out << "inside = " << report.inside << '\n';
  out << "skipped = " << report.skipped << '\n';
  out << "fraction_inside = " << format_real(report.fraction_inside, 6) << '\n';
  if (report.worst) {
    out << "worst_violation.t = " << format_real(report.worst->t, 6) << '\n';
    out << "worst_violation.band_widths = " << format_real(report.worst->band_widths, 4) << '\n';
  }
  if (config.out_dir) {
    ensure_directory(*config.out_dir);
    auto f = open_output(*config.out_dir / "verdicts.csv");
    write_verdicts_csv(f, report);
  }
  return report.inside == report.total ? kOk : kEnclosureFailure;
}

}  // namespace

ExitCode exit_code_for(const Error& error) noexcept {
  switch (error.code()) {
    case ErrorCode::NotUnderdamped:
      return kNotUnderdamped;
    case ErrorCode::Config:
    case ErrorCode::Io:
    case ErrorCode::InvalidSpec:
    case ErrorCode::MalformedRow:
    case ErrorCode::NonMonotoneTime:
    case ErrorCode::TooFewSamples:
    case ErrorCode::NonFinite:
      return kConfigError;
    default:
      return kDomainError;
  }
}

void RunConfig::validate() const {
  if (!std::filesystem::exists(circuit)) {
    throw Error(ErrorCode::Config, "circuit config '" + circuit.string() + "' does not exist");
  }
  if (trace && !std::filesystem::exists(*trace)) {
    throw Error(ErrorCode::Config, "trace '" + trace->string() + "' does not exist");
  }
  if (grid_points < 100) {
    throw Error(ErrorCode::Config, "grid needs at least 100 points");
  }
  if (!(t_end_multiplier > 0.0)) {
    throw Error(ErrorCode::Config, "t-end multiplier must be positive");
  }
  if (precision < 1 || precision > 17) {
    throw Error(ErrorCode::Config, "precision must be within 1..17");
  }
}

void write_metrics_report(std::ostream& out, const CircuitSpec& spec,
                          const std::optional<Trace>& normalized_trace, std::size_t grid_points,
                          double t_end_multiplier, int precision) {
  const SecondOrderParams box = derive_params(spec);
  const SecondOrderParams nominal = derive_params(spec.nominal_only());
  const TransientSpecs nominal_specs = specs_from_params(nominal);
  const TransientSpecs box_specs = specs_from_params(box);
  const ResponseBand band =
      step_response_band(box, default_grid(box.nominal, grid_points, t_end_multiplier));
  const TransientSpecs band_specs = specs_from_band(band, box);
  const SecondOrderParams band_identified = identify(band_specs.overshoot, box_specs.peak_time);

  std::optional<TransientSpecs> trace_specs;
  std::optional<SecondOrderParams> trace_params;
  if (normalized_trace) {
    trace_specs = measure_specs(*normalized_trace);
    trace_params = identify(trace_specs->overshoot, trace_specs->peak_time);
  }

  ReportWriter w(out, precision);
  out << "# overshoot in percent of the final value; times in s; frequencies in rad/s\n";
  out << "# ts: rise time (first crossing), tp: peak time, ta: 2% settling time\n";
  out << "# nominal: point values; trace: measured (" << to_string(Pipeline::FromTrace)
      << "); interval.<pipeline>: guaranteed enclosures\n";
  if (normalized_trace) out << "trace = " << normalized_trace->label() << '\n';

  w.section("transient");
  // Overshoot is carried as a fraction and rendered in percent.
  const auto shown = [](Interval TransientSpecs::*field, const TransientSpecs& specs) {
    const Interval& v = specs.*field;
    return field == &TransientSpecs::overshoot ? Interval::point(100.0) * v : v;
  };
  const auto spec_rows = [&](const std::string& key, Interval TransientSpecs::*field) {
    w.point(key + ".nominal", shown(field, nominal_specs).midpoint());
    if (trace_specs) w.point(key + ".trace", shown(field, *trace_specs).midpoint());
    if (field == &TransientSpecs::overshoot) {
      w.interval(key + ".interval." + std::string(to_string(Pipeline::FromBand)),
                 shown(field, band_specs));
    }
    w.interval(key + ".interval." + std::string(to_string(Pipeline::FromParams)),
               shown(field, box_specs));
  };
  spec_rows("mp_pct", &TransientSpecs::overshoot);
  spec_rows("ts", &TransientSpecs::rise_time);
  spec_rows("tp", &TransientSpecs::peak_time);
  spec_rows("ta", &TransientSpecs::settling_time);

  w.section("dynamics");
  const auto param_rows = [&](const std::string& key, Interval SecondOrderParams::*field,
                              double NominalParams::*nominal_field) {
    w.point(key + ".nominal", nominal.nominal.*nominal_field);
    if (trace_params) w.point(key + ".trace", ((*trace_params).*field).midpoint());
    w.interval(key + ".interval.component_box", box.*field);
    w.interval(key + ".interval." + std::string(to_string(Pipeline::FromBand)),
               band_identified.*field);
  };
  param_rows("xi", &SecondOrderParams::xi, &NominalParams::xi);
  param_rows("omega_d", &SecondOrderParams::omegad, &NominalParams::omegad);
  param_rows("omega_0", &SecondOrderParams::omega0, &NominalParams::omega0);
}

void write_dependency_demo(std::ostream& out) {
  const Interval x(0.0, 1.0);
  const Interval one = Interval::point(1.0);
  const Interval factored = x * (one - x);
  const Interval expanded = x - x * x;
  out << "X = " << to_string(x) << '\n';
  out << "f(X)  = X * (1 - X) = " << to_string(factored) << '\n';
  out << "F1(X) = X - X * X   = " << to_string(expanded) << '\n';
  out << "f(X) contained in F1(X): " << (expanded.contains(factored) ? "yes" : "no") << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval enclosures of the series-RLC unit-step response", "rlcband"};
  app.require_subcommand(1);

  RunConfig config;
  std::string circuit_path;
  std::string trace_path;
  std::string out_path;
  const auto add_common = [&](CLI::App* sub, bool with_trace) {
    sub->add_option("--config", circuit_path, "Circuit config (key = value)")->required();
    if (with_trace) sub->add_option("--trace", trace_path, "Trace CSV with header t,v");
    sub->add_option("--out", out_path, "Output directory");
    sub->add_option("--grid-points", config.grid_points, "Band grid points");
    sub->add_option("--t-end-mult", config.t_end_multiplier,
                    "Grid end as a multiple of the nominal settling time");
    sub->add_option("--precision", config.precision, "Significant digits in reports");
  };

  auto* simulate = app.add_subcommand("simulate", "Write band.csv and nominal.csv");
  add_common(simulate, false);
  auto* metrics = app.add_subcommand("metrics", "Report transient specs and parameters");
  add_common(metrics, true);
  auto* check = app.add_subcommand("check", "Verify a trace lies inside the band");
  add_common(check, true);
  check->get_option("--trace")->required();

  auto* identify_cmd = app.add_subcommand("identify", "Identify xi, omega_d, omega_0 from M_p, t_p");
  std::string mp_text;
  std::string tp_text;
  int identify_precision = 6;
  identify_cmd->add_option("--mp", mp_text, "Overshoot fraction, number or [lo; hi]")->required();
  identify_cmd->add_option("--tp", tp_text, "Peak time in s, number or [lo; hi]")->required();
  identify_cmd->add_option("--precision", identify_precision, "Significant digits");

  auto* demo = app.add_subcommand("demo-dependency", "Show the interval dependency effect");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    config.circuit = circuit_path;
    if (!trace_path.empty()) config.trace = trace_path;
    if (!out_path.empty()) config.out_dir = out_path;
    if (*demo) {
      write_dependency_demo(out);
      return kOk;
    }
    if (*identify_cmd) return cmd_identify(mp_text, tp_text, identify_precision, out);
    config.validate();
    if (*simulate) return cmd_simulate(config, out);
    if (*metrics) return cmd_metrics(config, out);
    if (*check) return cmd_check(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace rlcband::cli
