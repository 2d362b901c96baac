#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "dqd/errors.hpp"
#include "dqd/version.hpp"
#include "format.hpp"
#include "json.hpp"
#include "validation.hpp"

namespace dqd::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

// Opens the requested sink before any computation so unwritable paths fail
// fast with exit code 3.
void with_output(const RunConfig& config, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& body) {
  if (config.output_path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file)
    throw io_error("cannot open output file: " + config.output_path);
  body(file);
  if (!file)
    throw io_error("write failed: " + config.output_path);
}

std::string_view path_flag(SpectrumSource s) {
  return s == SpectrumSource::analytic ? "analytic" : "numeric";
}

}  // namespace

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "axis,axis_value,concurrence,c_l1_total,c_l1_local,c_cc,path_flag\n";
  const std::string_view axis = to_string(result.spec.axis);
  for (const SweepRow& row : result.rows) {
    out << axis << ',' << fmt12(row.axis_value) << ','
        << fmt12(row.concurrence) << ',' << fmt12(row.c_l1_total) << ','
        << fmt12(row.c_l1_local) << ',' << fmt12(row.c_cc) << ','
        << path_flag(row.path) << '\n';
  }
}

void write_sweep_json(const SweepResult& result, std::ostream& out) {
  ordered_json j;
  j["axis"] = std::string(to_string(result.spec.axis));
  j["label"] = result.spec.label;
  j["theta"] = result.spec.theta;
  j["fixed"] = {{"d1", result.spec.fixed.delta1},
                {"d2", result.spec.fixed.delta2},
                {"v", result.spec.fixed.v},
                {"t", json_number_or_inf(result.spec.fixed_temperature)}};
  j["provenance"] = result.provenance;
  ordered_json rows = ordered_json::array();
  for (const SweepRow& row : result.rows) {
    rows.push_back({{"axis_value", row.axis_value},
                    {"concurrence", row.concurrence},
                    {"c_l1_total", row.c_l1_total},
                    {"c_l1_local", row.c_l1_local},
                    {"c_cc", row.c_cc},
                    {"path_flag", std::string(path_flag(row.path))}});
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

namespace {

void cmd_point(const RunConfig& config, std::ostream& out) {
  const Temperature t(config.temperature);
  const ThermalState state = gibbs_analytic(config.params, t);
  const Spectrum spectrum = analytic_spectrum(config.params);
  const MeasureSet m = correlated_coherence(state, config.theta);

  with_output(config, out, [&](std::ostream& sink) {
    if (config.format == OutputFormat::csv) {
      sink << "d1,d2,v,t,theta,eps1,eps2,eps3,eps4,"
              "rho11,rho12,rho13,rho14,rho22,rho23,"
              "z_shifted,z_shift,concurrence,c_l1_total,c_l1_local,c_cc,"
              "path_flag\n";
      sink << fmt12(config.params.delta1) << ',' << fmt12(config.params.delta2)
           << ',' << fmt12(config.params.v) << ',' << fmt12(t.value()) << ','
           << fmt12(config.theta);
      for (const double e : spectrum.energies) sink << ',' << fmt12(e);
      sink << ',' << fmt12(state.elements.r11) << ','
           << fmt12(state.elements.r12) << ',' << fmt12(state.elements.r13)
           << ',' << fmt12(state.elements.r14) << ','
           << fmt12(state.elements.r22) << ',' << fmt12(state.elements.r23)
           << ',' << fmt12(state.z.value) << ',' << fmt12(state.z.shift) << ','
           << fmt12(m.concurrence) << ',' << fmt12(m.c_l1_total) << ','
           << fmt12(m.c_l1_local) << ',' << fmt12(m.c_cc) << ','
           << path_flag(state.path) << '\n';
    } else {
      ordered_json j;
      j["d1"] = config.params.delta1;
      j["d2"] = config.params.delta2;
      j["v"] = config.params.v;
      j["t"] = json_number_or_inf(t.value());
      j["theta"] = config.theta;
      j["energies"] = spectrum.energies;
      j["rho"] = {{"r11", state.elements.r11}, {"r12", state.elements.r12},
                  {"r13", state.elements.r13}, {"r14", state.elements.r14},
                  {"r22", state.elements.r22}, {"r23", state.elements.r23}};
      j["z"] = {{"shifted", state.z.value}, {"shift", state.z.shift}};
      j["concurrence"] = m.concurrence;
      j["c_l1_total"] = m.c_l1_total;
      j["c_l1_local"] = m.c_l1_local;
      j["c_cc"] = m.c_cc;
      j["path_flag"] = std::string(path_flag(state.path));
      sink << j.dump(2) << '\n';
    }
  });
}

void cmd_sweep(const RunConfig& config, std::ostream& out) {
  const SweepResult result = run_sweep(config.sweep);
  with_output(config, out, [&](std::ostream& sink) {
    if (config.format == OutputFormat::csv)
      write_sweep_csv(result, sink);
    else
      write_sweep_json(result, sink);
  });
}

void cmd_threshold(const RunConfig& config, std::ostream& out) {
  const double t_star = threshold_temperature(config.params, config.t_lo,
                                              config.t_hi, config.tol);
  with_output(config, out, [&](std::ostream& sink) {
    if (config.format == OutputFormat::csv) {
      sink << "t_star\n" << fmt12(t_star) << '\n';
    } else {
      ordered_json j;
      j["t_star"] = t_star;
      sink << j.dump(2) << '\n';
    }
  });
}

void cmd_figure(const RunConfig& config, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.outdir, ec);
  if (ec)
    throw io_error("cannot create output directory: " + config.outdir + " (" +
                   ec.message() + ")");

  const std::vector<SweepResult> curves = figure_dataset(config.figure);
  const std::string ext = config.format == OutputFormat::csv ? "csv" : "json";
  for (const SweepResult& curve : curves) {
    const fs::path path =
        fs::path(config.outdir) / (std::string(to_string(config.figure)) +
                                   "_" + curve.spec.label + "." + ext);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw io_error("cannot open output file: " + path.string());
    if (config.format == OutputFormat::csv)
      write_sweep_csv(curve, file);
    else
      write_sweep_json(curve, file);
    if (!file) throw io_error("write failed: " + path.string());
    out << "wrote " << path.string() << '\n';
  }
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const ValidationReport report =
      run_validation(config.grid_points, config.seed);
  with_output(config, out,
              [&](std::ostream& sink) { print_report(report, sink); });
  return report.pass() ? kExitOk : kExitNumeric;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    switch (config.command) {
      case Command::point: cmd_point(config, out); return kExitOk;
      case Command::sweep: cmd_sweep(config, out); return kExitOk;
      case Command::threshold: cmd_threshold(config, out); return kExitOk;
      case Command::figure: cmd_figure(config, out); return kExitOk;
      case Command::validate: return cmd_validate(config, out);
    }
    return kExitUsage;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const numeric_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  config.theta = std::numbers::pi / 4.0;
  config.grid_points = kDefaultValidationPoints;
  config.seed = kDefaultValidationSeed;

  std::string format_name = "csv";
  std::string axis_name;
  std::string figure_name;
  std::string grid_name = "default";

  CLI::App app{"Thermal entanglement and correlated coherence for two "
               "coupled double-quantum-dot charge qubits"};
  app.set_version_flag("--version", std::string(kEngineName) + " " +
                                        std::string(kVersion));
  app.require_subcommand(1);

  const std::map<std::string, SweepAxis> axis_map{
      {"temperature", SweepAxis::temperature},
      {"coulomb", SweepAxis::coulomb},
      {"delta1", SweepAxis::delta1},
      {"delta2", SweepAxis::delta2}};
  const std::map<std::string, FigureId> figure_map{
      {"fig2", FigureId::fig2},   {"fig3", FigureId::fig3},
      {"fig4", FigureId::fig4},   {"fig5a", FigureId::fig5a},
      {"fig5b", FigureId::fig5b}, {"fig5c", FigureId::fig5c},
      {"fig6", FigureId::fig6}};

  const auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--d1", config.params.delta1, "Tunneling of qubit A")
        ->required();
    cmd->add_option("--d2", config.params.delta2, "Tunneling of qubit B")
        ->required();
    cmd->add_option("--v", config.params.v, "Coulomb coupling")->required();
  };
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format (csv|json)")
        ->transform(CLI::IsMember({"csv", "json"}, CLI::ignore_case));
    cmd->add_option("--output", config.output_path,
                    "Output file ('-' for stdout)");
  };

  CLI::App* point = app.add_subcommand(
      "point", "Evaluate spectrum, state and measures at one point");
  add_model_flags(point);
  point->add_option("--t", config.temperature,
                    "Temperature (0 and inf are accepted)")
      ->required();
  point->add_option("--theta", config.theta, "Basis angle (default pi/4)");
  add_output_flags(point);
  point->callback([&] { config.command = Command::point; });

  CLI::App* sweep =
      app.add_subcommand("sweep", "Sweep one axis and tabulate measures");
  sweep->add_option("--axis", axis_name,
                    "Swept axis (temperature|coulomb|delta1|delta2)")
      ->transform(CLI::IsMember({"temperature", "coulomb", "delta1", "delta2"},
                                CLI::ignore_case))
      ->required();
  sweep->add_option("--from", config.sweep.start, "Axis start")->required();
  sweep->add_option("--to", config.sweep.stop, "Axis stop")->required();
  sweep->add_option("--points", config.sweep.points, "Grid size (>= 2)")
      ->required();
  sweep->add_flag("--log", config.sweep.log_scale, "Logarithmic grid");
  sweep->add_option("--d1", config.sweep.fixed.delta1, "Tunneling of qubit A");
  sweep->add_option("--d2", config.sweep.fixed.delta2, "Tunneling of qubit B");
  sweep->add_option("--v", config.sweep.fixed.v, "Coulomb coupling");
  sweep->add_option("--t", config.sweep.fixed_temperature,
                    "Fixed temperature for non-temperature axes");
  sweep->add_option("--theta", config.theta, "Basis angle (default pi/4)");
  add_output_flags(sweep);
  sweep->callback([&] {
    config.command = Command::sweep;
    config.sweep.axis = axis_map.at(axis_name);
    config.sweep.theta = config.theta;
  });

  CLI::App* threshold = app.add_subcommand(
      "threshold", "Find the temperature where the concurrence vanishes");
  add_model_flags(threshold);
  threshold->add_option("--t-lo", config.t_lo, "Lower bracket (default 0.01)");
  threshold->add_option("--t-hi", config.t_hi, "Upper bracket (default 1000)");
  threshold->add_option("--tol", config.tol, "Bisection tolerance");
  add_output_flags(threshold);
  threshold->callback([&] { config.command = Command::threshold; });

  CLI::App* figure = app.add_subcommand(
      "figure",
      "Emit the reference dataset for one figure, one file per curve");
  figure
      ->add_option("id", figure_name, "fig2|fig3|fig4|fig5a|fig5b|fig5c|fig6")
      ->transform(CLI::IsMember(
          {"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "fig6"},
          CLI::ignore_case))
      ->required();
  figure->add_option("--outdir", config.outdir, "Output directory");
  figure->add_option("--format", format_name, "Output format (csv|json)")
      ->transform(CLI::IsMember({"csv", "json"}, CLI::ignore_case));
  figure->callback([&] {
    config.command = Command::figure;
    config.figure = figure_map.at(figure_name);
  });

  CLI::App* validate = app.add_subcommand(
      "validate", "Run the analytic-vs-numeric validation grid");
  validate->add_option("--grid", grid_name, "Grid size (default|coarse)")
      ->transform(CLI::IsMember({"default", "coarse"}, CLI::ignore_case));
  validate->add_option("--seed", config.seed, "Random seed");
  validate->add_option("--output", config.output_path,
                       "Output file ('-' for stdout)");
  validate->callback([&] {
    config.command = Command::validate;
    config.grid_points = grid_name == "coarse" ? kCoarseValidationPoints
                                               : kDefaultValidationPoints;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  config.format = format_name == "json" ? OutputFormat::json
                                        : OutputFormat::csv;
  return run_command(config, out, err);
}

}  // namespace dqd::cli
