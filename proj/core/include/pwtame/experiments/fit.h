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

#ifndef PWTAME_EXPERIMENTS_FIT_H_
#define PWTAME_EXPERIMENTS_FIT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pwtame/formulation/hyperparams.h"
#include "pwtame/formulation/mps.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/oracle/oracle.h"
#include "pwtame/solver/branch_and_bound.h"
#include "pwtame/tree/model.h"

namespace pwtame::experiments {

enum class Engine { kMip, kOracle };

std::string EngineName(Engine engine);
absl::StatusOr<Engine> ParseEngine(absl::string_view name);

struct FitOptions {
  formulation::FormulationKind formulation =
      formulation::FormulationKind::kAxisAligned;
  Engine engine = Engine::kMip;
  formulation::Hyperparams params;
  solver::SolverConfig solver;
  // Oracle only; the MIP minimizes the mean absolute error.
  oracle::Loss loss = oracle::Loss::kMae;
  bool override_guard = false;
  // Keeps the fixed-format MPS export of the MIP in the outcome.
  bool export_mps = false;
  // Skips the native solve and decodes this external solution instead. The
  // name table (from the MPS export) translates MPS column names.
  std::optional<std::string> solution_text;
  std::string solution_name_table;
};

// Status strings: solver::MipStatusName values, "imported" for an external
// solution, and "resource_exhausted" when the native LP does not fit the
// tableau memory cap.
struct FitOutcome {
  std::string status;
  std::optional<tree::PwPolyModel> model;
  // Mean absolute error over the training set (MIP objective); NaN when no
  // model was found. For the oracle this is its loss / n.
  double objective = 0.0;
  double best_bound = 0.0;
  double gap = 0.0;
  int64_t nodes = 0;
  int64_t lp_iterations = 0;
  double wall_time = 0.0;
  std::string message;
  std::optional<formulation::MpsFiles> mps;
};

absl::StatusOr<FitOutcome> Fit(const functions::SampleSet& samples,
                               const FitOptions& options);

// Mean |y_i - model(x_i)| over the samples.
absl::StatusOr<double> TrainingMae(const tree::PwPolyModel& model,
                                   const functions::SampleSet& samples);

}  // namespace pwtame::experiments

#endif  // PWTAME_EXPERIMENTS_FIT_H_
