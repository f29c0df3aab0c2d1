// Copyright 2026 The cqed-dit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cqed/driver.hpp"

namespace {

using namespace cqed::driver;

struct CommonFlags {
  std::string config;
  std::string out;
  unsigned jobs = 1;
  std::string grid;
  std::string port;
  std::string norm;
  std::string method;
  bool plot = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON configuration file");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--grid", f.grid, "frequency grid MIN:MAX:POINTS (offset, units of gamma)");
  cmd->add_option("--port", f.port, "IOF port: through or drop");
  cmd->add_option("--norm", f.norm, "normalization: raw, unit_max or unit_area");
  cmd->add_option("--method", f.method, "IPM, IOF or both");
  cmd->add_flag("--plot", f.plot, "also write a gnuplot script");
}

RunConfig build_config(const CommonFlags& f) {
  RunConfig c = f.config.empty() ? RunConfig{} : load_config(f.config);
  if (!f.out.empty()) c.output_dir = f.out;
  c.jobs = f.jobs;
  if (!f.grid.empty()) c.grid = parse_grid_spec(f.grid);
  try {
    if (!f.port.empty()) c.port = cqed::parse_port(f.port);
    if (!f.norm.empty()) c.normalization = cqed::parse_normalization(f.norm);
  } catch (const cqed::InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  if (!f.method.empty()) {
    if (f.method == "IPM") c.method = MethodSelection::IPM;
    else if (f.method == "IOF") c.method = MethodSelection::IOF;
    else if (f.method == "both") c.method = MethodSelection::both;
    else throw ConfigError("--method: expected IPM, IOF or both");
  }
  if (f.plot) c.plot = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cavity QED transmission spectra: input-output and pumped-emission methods"};
  app.set_version_flag("--version", std::string(cqed::kVersion));
  app.require_subcommand(1);

  CommonFlags spectrum_flags, sweep_flags, figure_flags;
  auto* spectrum = app.add_subcommand("spectrum", "compute one parameter point");
  add_common(spectrum, spectrum_flags);
  auto* sweep = app.add_subcommand("sweep", "sweep one parameter (config needs a sweep block)");
  add_common(sweep, sweep_flags);
  auto* figure = app.add_subcommand("figure", "reproduce a canned figure configuration");
  add_common(figure, figure_flags);
  std::string figure_id;
  figure->add_option("id", figure_id, "fig1, fig2 or fig3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(build_config(spectrum_flags));
    if (sweep->parsed()) {
      RunConfig c = build_config(sweep_flags);
      if (!c.sweep) throw ConfigError("sweep: configuration has no sweep block");
      return run_sweep(c);
    }
    const FigureId id = parse_figure(figure_id);
    return reproduce_figure(id, build_config(figure_flags));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cqed::Error& e) {
    std::cerr << "numerical failure: " << e.name() << ": " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
