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

#ifndef PWTAME_EXPERIMENTS_SCENARIO_H_
#define PWTAME_EXPERIMENTS_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/experiments/fit.h"
#include "pwtame/experiments/grid.h"
#include "pwtame/functions/grid_signal.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/functions/sampling.h"
#include "pwtame/functions/test_functions.h"

namespace pwtame::experiments {

// Noisy piecewise-constant grid used when the scenario function is kGrid.
struct DenoiseConfig {
  int grid_size = 8;
  std::string preset = "quadrants";
  double sigma = 0.5;
};

struct ScenarioConfig {
  std::string name;
  functions::FunctionKind function = functions::FunctionKind::kL1;
  functions::ConeParams cone;
  std::string domain = "0+-1";
  functions::LabelSource labels = functions::LabelSource::kRoundedPoint;
  int n = 30;
  uint64_t seed = 1;
  FitOptions fit;
  int grid_resolution = 101;
  DenoiseConfig denoise;

  absl::Status Validate() const;
};

// "l1", "linf", "cone", "cone-d3", "denoise".
std::vector<std::string> ScenarioNames();

// Desk-scale defaults solve to proven optimality in seconds; the --paper-scale
// variants (n = 250, 25x25 denoising grid) also export the MIP as MPS and
// are expected to stop at the time limit or need an external solver.
absl::StatusOr<ScenarioConfig> DefaultScenario(absl::string_view name,
                                               bool paper_scale);

// TOML-style document: `key = value` lines, optional [cone], [model],
// [solver] and [denoise] tables, '#' comments, strings in double quotes.
// Keys absent from the text keep their value from `base`.
absl::StatusOr<ScenarioConfig> ParseScenarioConfig(absl::string_view text,
                                                   ScenarioConfig base);
std::string ScenarioConfigToText(const ScenarioConfig& config);

struct BlockResult {
  int cells = 0;
  double truth = 0.0;
  // Mean prediction over the block's cells.
  double recovered = 0.0;
  double error = 0.0;
  // 3 sigma / sqrt(cells).
  double tolerance = 0.0;
  bool within = false;
};

struct Report {
  std::string scenario;
  std::string status;
  double objective = 0.0;
  double best_bound = 0.0;
  double gap = 0.0;
  int64_t nodes = 0;
  int64_t lp_iterations = 0;
  // Kept out of the JSON so that deterministic runs give identical files.
  double wall_time = 0.0;
  std::string message;
  std::optional<double> training_mae;
  std::optional<double> grid_sup_error;
  std::vector<BlockResult> blocks;
  // File names relative to the output directory.
  std::vector<std::string> artifacts;
};

struct ScenarioRun {
  ScenarioConfig config;
  functions::SampleSet samples;
  FitOutcome fit;
  std::optional<Grid> pred_grid;
  Grid truth_grid;
  Report report;
};

absl::StatusOr<ScenarioRun> RunScenario(const ScenarioConfig& config);

struct DenoiseResult {
  functions::SampleSet samples;
  FitOutcome fit;
  std::vector<BlockResult> blocks;
};

// Fits the tree to the noisy grid and compares each block's mean prediction
// with its true value.
absl::StatusOr<DenoiseResult> RunDenoise(const functions::GridSignalSpec& spec,
                                         const FitOptions& options);

std::string ReportToJson(const Report& report, const ScenarioConfig& config);

// Writes the artifacts listed in the report under `directory` (created if
// needed).
absl::Status WriteScenarioOutputs(const ScenarioRun& run,
                                  const std::string& directory);

absl::Status WriteTextFile(const std::string& path, absl::string_view text);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);

}  // namespace pwtame::experiments

#endif  // PWTAME_EXPERIMENTS_SCENARIO_H_
