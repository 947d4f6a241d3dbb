/*
 * Copyright 2026 The flotcol Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "flotcol/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flotcol/chart.hpp"
#include "flotcol/errors.hpp"
#include "flotcol/export.hpp"
#include "flotcol/json_io.hpp"
#include "flotcol/scenario.hpp"
#include "flotcol/steady_state.hpp"

namespace flotcol
{

namespace
{

std::string join(const std::string & dir, const char * name)
{
  return (std::filesystem::path(dir) / name).string();
}

void write_json(const json & j, const std::string & path)
{
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
}

int report_error(std::ostream & err, std::string_view name, const std::string & message, int code)
{
  err << json{{"error", name}, {"message", message}}.dump() << '\n';
  return code;
}

struct SimulateArgs
{
  std::string input;
  std::optional<int> n_cells;
  std::optional<double> t_end;
  std::optional<double> output_every;
  std::string out_dir = ".";
};

int simulate(const SimulateArgs & a, std::ostream & out)
{
  Scenario sc = parse_as<Scenario>(read_json_file(a.input));
  if (a.n_cells) {
    sc.N = *a.n_cells;
  }
  if (a.t_end) {
    sc.T_end = *a.t_end;
  }
  if (a.output_every) {
    sc.output_every = *a.output_every;
  }
  const TimeSeries ts = run(sc);
  write_series_csv(ts, join(a.out_dir, "series.csv"));
  write_outlets_csv(ts, join(a.out_dir, "outlets.csv"));
  write_profile_svg(ts.z, ts.phi.back(), ts.psi.back(),
    "t = " + format_number(ts.times.back()) + " s", join(a.out_dir, "final_profile.svg"));
  const json meta = {{"dt", ts.dt}, {"steps", ts.outlets.size()}, {"N", sc.N},
    {"T_end", sc.T_end}, {"snapshots", ts.times.size()}, {"safety", sc.safety}, {"cfl", ts.cfl}};
  write_json(meta, join(a.out_dir, "metadata.json"));
  out << meta.dump(2) << '\n';
  return 0;
}

int steady(const std::string & input, int n_points, const std::string & out_dir, std::ostream & out)
{
  const PointInput in = parse_as<PointInput>(read_json_file(input));
  const FeasibilityReport report = check_conditions(in.op, in.params, in.geometry);
  write_json(json(report), join(out_dir, "report.json"));
  const SteadyProfile prof = desired_steady_state(in.op, in.params, in.geometry, n_points);
  write_profile_csv(prof, join(out_dir, "profile.csv"));
  write_profile_svg(prof.z, prof.phi, prof.psi, "desired steady state",
    join(out_dir, "profile.svg"));
  out << json(report).dump(2) << '\n';
  return 0;
}

int check(const std::string & input, std::ostream & out)
{
  const PointInput in = parse_as<PointInput>(read_json_file(input));
  out << json(check_conditions(in.op, in.params, in.geometry)).dump(2) << '\n';
  return 0;
}

int chart(const std::string & input, const std::string & out_dir, std::ostream & out)
{
  const ChartSpec spec = parse_as<ChartSpec>(read_json_file(input));
  const ChartResult result = evaluate_chart(spec);
  export_chart(result, join(out_dir, "chart.csv"));
  int feasible = 0;
  for (const auto & c : result.cells) {
    feasible += c.report.feasible() ? 1 : 0;
  }
  out << json{{"cells", result.cells.size()}, {"feasible", feasible},
    {"csv", join(out_dir, "chart.csv")}, {"svg", join(out_dir, "chart.svg")}}.dump(2) << '\n';
  return 0;
}

int params(const std::string & input, std::ostream & out)
{
  const PhysicalConfig cfg = parse_as<PhysicalConfig>(read_json_file(input));
  validate(cfg.physical);
  json j = cfg.derive();
  j["v_drain_physical"] = drainage_velocity_physical(cfg.physical);
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, char ** argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Flotation column steady states, operating charts and simulation", "flotcol"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto * cmd_sim = app.add_subcommand("simulate", "Run a scenario and write series.csv and outlets.csv");
  cmd_sim->add_option("scenario", sim.input, "Scenario JSON file")->required();
  cmd_sim->add_option("--n-cells", sim.n_cells, "Number of grid cells N");
  cmd_sim->add_option("--t-end", sim.t_end, "Final time [s]");
  cmd_sim->add_option("--output-every", sim.output_every, "Snapshot interval [s]");
  cmd_sim->add_option("--out-dir", sim.out_dir, "Output directory");

  std::string point_file;
  std::string out_dir = ".";
  int n_points = 3200;
  auto * cmd_steady = app.add_subcommand("steady", "Desired steady state profile and report");
  cmd_steady->add_option("point", point_file, "Operating point JSON file")->required();
  cmd_steady->add_option("--n-points", n_points, "Number of sample heights");
  cmd_steady->add_option("--out-dir", out_dir, "Output directory");

  auto * cmd_check = app.add_subcommand("check", "Print the feasibility report as JSON");
  cmd_check->add_option("point", point_file, "Operating point JSON file")->required();

  std::string chart_file;
  auto * cmd_chart = app.add_subcommand("chart", "Operating chart CSV and SVG");
  cmd_chart->add_option("spec", chart_file, "Chart specification JSON file")->required();
  cmd_chart->add_option("--out-dir", out_dir, "Output directory");

  std::string physical_file;
  auto * cmd_params = app.add_subcommand("params", "Print derived constitutive parameters");
  cmd_params->add_option("physical", physical_file, "Physical parameter JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp & e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError & e) {
    return report_error(err, "UsageError", e.what(), 1);
  }

  try {
    if (*cmd_sim) {
      return simulate(sim, out);
    }
    if (*cmd_steady) {
      return steady(point_file, n_points, out_dir, out);
    }
    if (*cmd_check) {
      return check(point_file, out);
    }
    if (*cmd_chart) {
      return chart(chart_file, out_dir, out);
    }
    if (*cmd_params) {
      return params(physical_file, out);
    }
  } catch (const Error & e) {
    return report_error(err, e.name(), e.what(), is_validation_error(e.code()) ? 1 : 2);
  } catch (const std::filesystem::filesystem_error & e) {
    return report_error(err, error_name(ErrorCode::IoError), e.what(), 1);
  } catch (const std::exception & e) {
    return report_error(err, "InternalError", e.what(), 2);
  }
  return 1;
}

}  // namespace flotcol
