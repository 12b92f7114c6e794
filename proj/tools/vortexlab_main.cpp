// Copyright 2026 The vortexlab Authors
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


#include <CLI11.hpp>

#include <array>
#include <iostream>

#include "vortexlab/cli.hpp"

int main(int argc, char** argv) {
  vortexlab::RunConfig config;
  CLI::App app{"vortexlab: cylindrical vortex laboratory"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--input", config.inputs, "input JSON file");
  app.add_option("--output", config.output, "output file (default: standard output)");
  app.add_option("--grid", config.grid, "grid size");
  app.add_option("--n-max", config.n_max, "iterate, row or frequency count");
  app.add_option("--stages", config.stages, "number of construction stages");
  app.add_option("--m1", config.m1, "family index of the first stage (fs: first m)");
  app.add_option("--m-max", config.m_max, "largest family index searched");
  app.add_option("--ell1", config.ell1, "first amplitude, a decimal >= 1");
  app.add_option("--tau", config.tau, "Diophantine exponent");
  app.add_option("--bound", config.bound, "coefficient bound for the independence check");
  app.add_option("--tolerance", config.tolerance, "residual tolerance");
  app.add_option("--radius", config.radius, "escape radius");
  app.add_option("--samples", config.samples, "sample points per fiber for set checks");
  app.add_option("--seed", config.seed, "random seed");

  const std::array<const char*, vortexlab::kCommands.size()> about = {
      "iterate a vortex, CSV rows n = 0, 1, ...",
      "sup |rho_n| / n along n = 1, 2, 4, ...",
      "Cesaro sections and their defects",
      "solve the cohomological equation by Fourier division",
      "small divisors and the best Diophantine constant",
      "invariant set at infinity for one isometry",
      "invariant sets over a finite cyclic base",
      "FS(2,3) entries and grid coverage",
      "staged construction with certificates",
      "graph and orbit density certificates per stage",
      "first-return vortex on a subset of a finite base",
      "escape times from a ball under F and its inverse",
  };
  for (std::size_t i = 0; i < about.size(); ++i) {
    const char* name = vortexlab::kCommands[i];
    app.add_subcommand(name, about[i])->callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    vortexlab::report_error(std::cerr, "usage", e.what());
    return 1;
  }
  return vortexlab::run(config);
}
