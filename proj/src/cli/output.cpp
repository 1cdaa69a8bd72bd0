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

#include "colsim/cli/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace colsim::cli {
namespace {

using nlohmann::json;

std::string cell(const std::optional<double>& v) { return v ? format_sig(*v) : std::string{}; }

json num(double v) { return round_sig(v); }

json num(const std::optional<double>& v) { return v ? json(round_sig(*v)) : json(nullptr); }

json config_json(const RunConfig& cfg) {
  return {{"input", cfg.input.to_string()}, {"steps", cfg.steps},     {"r", num(cfg.step.r)},
          {"T", num(cfg.step.T)},           {"theta", num(cfg.step.theta)}, {"eta_s", num(cfg.step.eta_s)},
          {"eta_e", num(cfg.step.eta_e)}};
}

json matrix_json(const CMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rr.push_back(num(m(i, j).real()));
      ii.push_back(num(m(i, j).imag()));
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string format_sig(double value, int digits) {
  if (value == 0.0) value = 0.0;  // folds -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

double round_sig(double value, int digits) { return std::strtod(format_sig(value, digits).c_str(), nullptr); }

std::string render_evolve(const RunConfig& cfg, const Trajectory& traj) {
  const std::vector<double> n_cum = nm_cumulative(traj);
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& rec : traj.records)
      rows.push_back({{"step", rec.k},
                      {"T", num(traj.config.T)},
                      {"theta", num(traj.config.theta)},
                      {"C_as", num(rec.c_as)},
                      {"C_ae", num(rec.c_ae)},
                      {"purity", num(rec.purity_joint)},
                      {"N_cum", num(n_cum[rec.k])}});
    return dump({{"command", "evolve"}, {"config", config_json(cfg)}, {"rows", std::move(rows)}});
  }
  std::ostringstream os;
  os << "step,T,theta,C_as,C_ae,purity,N_cum\n";
  for (const auto& rec : traj.records)
    os << rec.k << ',' << format_sig(traj.config.T) << ',' << format_sig(traj.config.theta) << ',' << cell(rec.c_as)
       << ',' << cell(rec.c_ae) << ',' << format_sig(rec.purity_joint) << ',' << format_sig(n_cum[rec.k]) << '\n';
  return os.str();
}

std::string render_sweep(const RunConfig& cfg, const std::vector<SweepRow>& rows) {
  if (cfg.format == Format::Json) {
    json out = json::array();
    for (const auto& row : rows)
      out.push_back({{"T", num(row.T)},
                     {"theta", num(row.theta)},
                     {"step", row.step},
                     {"C_as", num(row.c_as)},
                     {"C_ae", num(row.c_ae)},
                     {"N_cum", num(row.n_cumulative)}});
    json config = config_json(cfg);
    config.erase("T");
    config.erase("theta");
    json t_grid = json::array();
    for (double t : cfg.grid.transmissivities) t_grid.push_back(num(t));
    json theta_grid = json::array();
    for (double th : cfg.grid.phases) theta_grid.push_back(num(th));
    config["T_grid"] = std::move(t_grid);
    config["theta_grid"] = std::move(theta_grid);
    return dump({{"command", "sweep"}, {"config", std::move(config)}, {"rows", std::move(out)}});
  }
  std::ostringstream os;
  os << "T,theta,step,C_as,C_ae,N_cum\n";
  for (const auto& row : rows)
    os << format_sig(row.T) << ',' << format_sig(row.theta) << ',' << row.step << ',' << cell(row.c_as) << ','
       << cell(row.c_ae) << ',' << format_sig(row.n_cumulative) << '\n';
  return os.str();
}

std::string render_tomo(const RunConfig& cfg, const std::vector<TomoStep>& steps) {
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& s : steps) {
      json row{{"step", s.step}, {"C_true", num(s.c_true)}};
      if (s.result) {
        row["C_mean"] = num(s.result->c_mean);
        row["C_std"] = num(s.result->c_std);
        row["rho_hat"] = matrix_json(s.result->rho_hat);
        json samples = json::array();
        for (const auto& m : s.result->mc_samples) samples.push_back(matrix_json(m));
        row["mc_samples"] = std::move(samples);
      } else {
        row["C_mean"] = nullptr;
        row["C_std"] = nullptr;
        row["rho_hat"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    json config = config_json(cfg);
    config["shots"] = cfg.shots;
    config["mc"] = cfg.mc_runs;
    config["seed"] = cfg.seed;
    config["sector"] = cfg.sector == Sector::System ? "s" : "e";
    return dump({{"command", "tomo"}, {"config", std::move(config)}, {"rows", std::move(rows)}});
  }
  std::ostringstream os;
  os << "step,C_true,C_mean,C_std\n";
  for (const auto& s : steps) {
    os << s.step << ',' << cell(s.c_true) << ',';
    if (s.result) {
      os << format_sig(s.result->c_mean) << ',' << format_sig(s.result->c_std);
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

std::string render_nm(const RunConfig& cfg, const NMResult& nm) {
  char buf[64];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf, "N=%.6f\n", nm.value == 0.0 ? 0.0 : nm.value);
  os << buf;
  for (const auto& inc : nm.increments) {
    std::snprintf(buf, sizeof buf, "increment k=%zu dC=%.6f\n", inc.k, inc.delta);
    os << buf;
  }
  os << "# input=" << cfg.input.to_string() << " r=" << format_sig(cfg.step.r) << " T=" << format_sig(cfg.step.T)
     << " theta=" << format_sig(cfg.step.theta) << " eta_s=" << format_sig(cfg.step.eta_s)
     << " eta_e=" << format_sig(cfg.step.eta_e) << " steps=" << cfg.steps << '\n';
  return os.str();
}

}  // namespace colsim::cli
