// Copyright 2026 The colsim Authors
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

#include "colsim/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "colsim/cli/output.hpp"
#include "colsim/cli/run_config.hpp"
#include "colsim/oracle.hpp"

namespace colsim::cli {
namespace {

constexpr double kOracleTolerance = 1e-10;

struct Invocation {
  Command command;
  RawOptions raw;
  std::string config_file;
};

void add_run_options(CLI::App* sub, RawOptions& raw, std::string& config_file) {
  const auto bind = [&](const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(
        flag, [&raw, key](const std::string& v) { raw[key] = v; }, help);
  };
  bind("--input", "input", "bell+, bell- or werner:F (default bell+)");
  bind("--steps", "steps", "number of collision steps (default 6)");
  bind("--r", "r", "beam-splitter reflectivity (default 0.5)");
  bind("--T", "T", "filter transmissivity; sweep accepts a list or start:stop:count");
  bind("--theta", "theta", "phase in radians, or pi, pi/2, pi/4; sweep accepts a list or range");
  bind("--eta-s", "eta-s", "parasitic system-arm transmission per step (default 1)");
  bind("--eta-e", "eta-e", "parasitic environment-arm transmission per step (default 1)");
  bind("--shots", "shots", "mean counts per projector for tomo (default 10000)");
  bind("--mc", "mc", "Monte-Carlo runs for tomo (default 100)");
  bind("--seed", "seed", "random seed for tomo (default 0)");
  bind("--sector", "sector", "tomography sector: s or e (default s)");
  bind("-o,--output", "output", "output file (default: stdout, or $COLSIM_OUTPUT_DIR/<command>.<format>)");
  bind("--format", "format", "csv or json (default csv)");
  sub->add_option("--config", config_file, "JSON file whose keys mirror the flag names; flags win");
}

std::string extension(Format f) { return f == Format::Json ? "json" : "csv"; }

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  std::optional<std::filesystem::path> path;
  if (cfg.output) {
    path = *cfg.output;
  } else if (const char* dir = std::getenv(kOutputDirEnv);
             dir != nullptr && *dir != '\0' && cfg.command != Command::Nm && cfg.command != Command::VerifyOracle) {
    path = std::filesystem::path(dir) / (to_string(cfg.command) + "." + extension(cfg.format));
  }
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write output file '" + path->string() + "'");
  file << text;
  if (!file) throw ConfigError("failed writing output file '" + path->string() + "'");
}

std::vector<TomoStep> run_tomography(const RunConfig& cfg) {
  const Trajectory traj = evolve(cfg.input, cfg.step, cfg.steps);
  std::vector<TomoStep> steps;
  for (const auto& rec : traj.records) {
    const auto& sector = cfg.sector == Sector::System ? rec.as : rec.ae;
    TomoStep s{rec.k, std::nullopt, std::nullopt};
    if (sector) {
      s.c_true = concurrence(sector->rho);
      // Disjoint per-step seed blocks: run i of step k draws from seed + k·mc + i.
      s.result = mc_errorbars(sector->rho, cfg.shots, cfg.mc_runs, cfg.seed + rec.k * cfg.mc_runs);
    }
    steps.push_back(std::move(s));
  }
  return steps;
}

int execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Evolve:
      emit(cfg, render_evolve(cfg, evolve(cfg.input, cfg.step, cfg.steps)), out);
      return kExitOk;
    case Command::Sweep:
      emit(cfg, render_sweep(cfg, sweep(cfg.input, cfg.grid, cfg.step, cfg.steps)), out);
      return kExitOk;
    case Command::Tomo:
      emit(cfg, render_tomo(cfg, run_tomography(cfg)), out);
      return kExitOk;
    case Command::Nm:
      emit(cfg, render_nm(cfg, nm_measure(evolve(cfg.input, cfg.step, cfg.steps))), out);
      return kExitOk;
    case Command::VerifyOracle: {
      const double d = oracle::compare(cfg.input, cfg.step, cfg.steps);
      char buf[96];
      std::snprintf(buf, sizeof buf, "trace_distance=%.3e\nstatus=%s\n", d, d <= kOracleTolerance ? "ok" : "FAIL");
      emit(cfg, buf, out);
      return d <= kOracleTolerance ? kExitOk : kExitNumerical;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collisional-model simulator for entanglement backflow in a linear-optics open system"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every command");

  Invocation inv{Command::Evolve, {}, {}};
  const std::pair<Command, const char*> verbs[] = {
      {Command::Evolve, "evolve: one stroboscopic trajectory, one row per step"},
      {Command::Sweep, "sweep: trajectories over a (T, theta) grid"},
      {Command::Tomo, "tomo: simulated tomography with Poisson noise and Monte-Carlo error bars"},
      {Command::Nm, "nm: non-Markovianity measure of one trajectory"},
      {Command::VerifyOracle, "verify-oracle"},
  };
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [command, description] : verbs) {
    CLI::App* sub = app.add_subcommand(to_string(command), description);
    if (command == Command::VerifyOracle) sub->group("");
    add_run_options(sub, inv.raw, inv.config_file);
    subs.emplace_back(command, sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  for (const auto& [command, sub] : subs)
    if (sub->parsed()) inv.command = command;

  try {
    if (!inv.config_file.empty()) merge_config_file(inv.config_file, inv.raw);
    const RunConfig cfg = build_config(inv.command, inv.raw);
    return execute(cfg, out);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace colsim::cli
