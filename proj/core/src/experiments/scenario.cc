// Copyright 2026 The pwtame Authors.
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

#include "pwtame/experiments/scenario.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "pwtame/functions/domain.h"
#include "pwtame/tree/model_io.h"

namespace pwtame::experiments {

namespace {

using nlohmann::ordered_json;

constexpr double kWithinSlack = 1e-9;

int CellOf(double u, int g) {
  return std::clamp(static_cast<int>(std::floor(u * g)), 0, g - 1);
}

ordered_json Finite(double x) {
  return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

absl::StatusOr<functions::GridSignalSpec> GridSpecOf(const ScenarioConfig& c) {
  functions::GridSignalSpec spec;
  spec.grid_size = c.denoise.grid_size;
  spec.noise_sigma = c.denoise.sigma;
  spec.seed = c.seed;
  absl::StatusOr<std::vector<functions::GridBlock>> blocks =
      functions::PresetBlocks(c.denoise.preset, c.denoise.grid_size);
  if (!blocks.ok()) return blocks.status();
  spec.blocks = *std::move(blocks);
  return spec;
}

}  // namespace

absl::StatusOr<DenoiseResult> RunDenoise(const functions::GridSignalSpec& spec,
                                         const FitOptions& options) {
  absl::StatusOr<functions::SampleSet> samples =
      functions::MakeGridSignal(spec);
  if (!samples.ok()) return samples.status();
  absl::StatusOr<FitOutcome> fit = Fit(*samples, options);
  if (!fit.ok()) return fit.status();
  DenoiseResult result{*std::move(samples), *std::move(fit), {}};
  if (!result.fit.model) return result;
  const int g = spec.grid_size;
  for (const functions::GridBlock& block : spec.blocks) {
    BlockResult br;
    br.cells = block.cell_count();
    br.truth = block.value;
    double sum = 0.0;
    for (int r = block.row_begin; r < block.row_end; ++r) {
      for (int c = block.col_begin; c < block.col_end; ++c) {
        absl::StatusOr<double> p =
            result.fit.model->Predict(result.samples.point(r * g + c));
        if (!p.ok()) return p.status();
        sum += *p;
      }
    }
    br.recovered = sum / br.cells;
    br.error = std::abs(br.recovered - br.truth);
    br.tolerance = 3.0 * spec.noise_sigma / std::sqrt(br.cells);
    br.within = br.error <= br.tolerance + kWithinSlack;
    result.blocks.push_back(br);
  }
  return result;
}

absl::StatusOr<ScenarioRun> RunScenario(const ScenarioConfig& config) {
  if (absl::Status st = config.Validate(); !st.ok()) return st;
  ScenarioRun run;
  run.config = config;
  UnitFunction truth;
  std::vector<BlockResult> blocks;
  if (config.function == functions::FunctionKind::kGrid) {
    absl::StatusOr<functions::GridSignalSpec> spec = GridSpecOf(config);
    if (!spec.ok()) return spec.status();
    absl::StatusOr<DenoiseResult> denoise = RunDenoise(*spec, config.fit);
    if (!denoise.ok()) return denoise.status();
    run.samples = std::move(denoise->samples);
    run.fit = std::move(denoise->fit);
    blocks = std::move(denoise->blocks);
    truth = [spec = *spec](std::span<const double> u) -> absl::StatusOr<double> {
      const int g = spec.grid_size;
      return spec.blocks[spec.BlockOf(CellOf(u[1], g), CellOf(u[0], g))].value;
    };
  } else {
    absl::StatusOr<functions::TestFunction> f =
        functions::MakeTestFunction(config.function, config.cone);
    if (!f.ok()) return f.status();
    absl::StatusOr<functions::Domain> domain =
        functions::ParseDomain(config.domain, 2);
    if (!domain.ok()) return domain.status();
    functions::SamplingOptions so;
    so.labels = config.labels;
    absl::StatusOr<functions::SampleSet> samples =
        functions::SampleUniform(*f, *domain, config.n, config.seed, so);
    if (!samples.ok()) return samples.status();
    run.samples = *std::move(samples);
    absl::StatusOr<FitOutcome> fit = Fit(run.samples, config.fit);
    if (!fit.ok()) return fit.status();
    run.fit = *std::move(fit);
    truth = [f = *f, transform = run.samples.transform](
                std::span<const double> u) -> absl::StatusOr<double> {
      return f(transform.FromUnit(u));
    };
  }
  absl::StatusOr<Grid> truth_grid =
      EvalFunctionGrid(truth, config.grid_resolution);
  if (!truth_grid.ok()) return truth_grid.status();
  run.truth_grid = *std::move(truth_grid);

  Report& r = run.report;
  r.scenario = config.name;
  r.status = run.fit.status;
  r.objective = run.fit.objective;
  r.best_bound = run.fit.best_bound;
  r.gap = run.fit.gap;
  r.nodes = run.fit.nodes;
  r.lp_iterations = run.fit.lp_iterations;
  r.wall_time = run.fit.wall_time;
  r.message = run.fit.message;
  r.blocks = std::move(blocks);
  r.artifacts = {"samples.csv"};
  if (run.fit.model) {
    absl::StatusOr<double> mae = TrainingMae(*run.fit.model, run.samples);
    if (!mae.ok()) return mae.status();
    r.training_mae = *mae;
    absl::StatusOr<Grid> pred = EvalGrid(*run.fit.model, config.grid_resolution);
    if (!pred.ok()) return pred.status();
    absl::StatusOr<double> sup = SupNormDistance(*pred, run.truth_grid);
    if (!sup.ok()) return sup.status();
    r.grid_sup_error = *sup;
    run.pred_grid = *std::move(pred);
    r.artifacts.push_back("model.json");
    r.artifacts.push_back("pred_grid.csv");
  }
  r.artifacts.push_back("truth_grid.csv");
  if (run.fit.mps) {
    r.artifacts.push_back("model.mps");
    r.artifacts.push_back("model_names.csv");
  }
  r.artifacts.push_back("report.json");
  return run;
}

std::string ReportToJson(const Report& report, const ScenarioConfig& config) {
  ordered_json doc;
  doc["scenario"] = report.scenario;
  ordered_json cfg;
  cfg["function"] = functions::FunctionKindName(config.function);
  if (config.function == functions::FunctionKind::kGrid) {
    cfg["grid_size"] = config.denoise.grid_size;
    cfg["preset"] = config.denoise.preset;
    cfg["sigma"] = config.denoise.sigma;
  } else {
    cfg["n"] = config.n;
    cfg["domain"] = config.domain;
    if (config.function == functions::FunctionKind::kCone) {
      cfg["cone_r"] = config.cone.r;
      cfg["cone_s"] = config.cone.s;
    }
  }
  cfg["seed"] = config.seed;
  cfg["formulation"] = formulation::FormulationName(config.fit.formulation);
  cfg["engine"] = EngineName(config.fit.engine);
  cfg["loss"] = oracle::LossName(config.fit.loss);
  cfg["depth"] = config.fit.params.depth;
  cfg["degree"] = config.fit.params.degree;
  cfg["min_leaf_points"] = config.fit.params.min_leaf_points;
  cfg["mu"] = config.fit.params.mu;
  cfg["time_limit"] = config.fit.solver.time_limit;
  cfg["gap_tolerance"] = config.fit.solver.gap_tolerance;
  cfg["grid_resolution"] = config.grid_resolution;
  doc["config"] = std::move(cfg);
  ordered_json solver;
  solver["status"] = report.status;
  solver["objective"] = Finite(report.objective);
  solver["best_bound"] = Finite(report.best_bound);
  solver["gap"] = Finite(report.gap);
  solver["nodes"] = report.nodes;
  solver["lp_iterations"] = report.lp_iterations;
  solver["message"] = report.message;
  doc["solver"] = std::move(solver);
  ordered_json metrics;
  metrics["training_mae"] =
      report.training_mae ? Finite(*report.training_mae) : ordered_json(nullptr);
  metrics["grid_sup_error"] = report.grid_sup_error
                                  ? Finite(*report.grid_sup_error)
                                  : ordered_json(nullptr);
  doc["metrics"] = std::move(metrics);
  if (!report.blocks.empty()) {
    ordered_json blocks = ordered_json::array();
    int within = 0;
    for (const BlockResult& b : report.blocks) {
      blocks.push_back({{"cells", b.cells},
                        {"truth", b.truth},
                        {"recovered", b.recovered},
                        {"error", b.error},
                        {"tolerance", b.tolerance},
                        {"within", b.within}});
      within += b.within;
    }
    doc["blocks"] = std::move(blocks);
    doc["blocks_within"] = within;
  }
  doc["artifacts"] = report.artifacts;
  return doc.dump(2) + "\n";
}

absl::Status WriteTextFile(const std::string& path, absl::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteScenarioOutputs(const ScenarioRun& run,
                                  const std::string& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", directory, ": ", ec.message()));
  }
  const std::filesystem::path dir(directory);
  for (const std::string& name : run.report.artifacts) {
    std::string text;
    if (name == "samples.csv") {
      text = functions::WriteSampleCsv(run.samples);
    } else if (name == "model.json") {
      text = tree::ModelToJson(*run.fit.model);
    } else if (name == "pred_grid.csv") {
      text = GridToCsv(*run.pred_grid);
    } else if (name == "truth_grid.csv") {
      text = GridToCsv(run.truth_grid);
    } else if (name == "model.mps") {
      text = run.fit.mps->mps;
    } else if (name == "model_names.csv") {
      text = run.fit.mps->name_table;
    } else if (name == "report.json") {
      text = ReportToJson(run.report, run.config);
    } else {
      return absl::InternalError(absl::StrCat("unknown artifact ", name));
    }
    if (absl::Status st = WriteTextFile((dir / name).string(), text); !st.ok()) {
      return st;
    }
  }
  return absl::OkStatus();
}

}  // namespace pwtame::experiments
