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

#include "pwtame/experiments/fit.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/strings/str_cat.h"
#include "pwtame/formulation/builder.h"
#include "pwtame/formulation/decode.h"
#include "pwtame/formulation/feasibility.h"
#include "pwtame/solver/solution_io.h"

namespace pwtame::experiments {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

absl::StatusOr<FitOutcome> FitOracle(const functions::SampleSet& samples,
                                     const FitOptions& options) {
  if (options.formulation != formulation::FormulationKind::kAxisAligned) {
    return absl::InvalidArgumentError(
        "the oracle engine enumerates axis-aligned trees only");
  }
  oracle::OracleOptions oo;
  oo.depth = options.params.depth;
  oo.degree = options.params.degree;
  oo.min_leaf_points = options.params.min_leaf_points;
  oo.loss = options.loss;
  oo.coeff_bound = options.params.coeff_bound;
  oo.override_guard = options.override_guard;
  oo.threads = options.solver.deterministic ? 1 : options.solver.threads;
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<oracle::OracleResult> result =
      oracle::EnumerateAxisTrees(samples, oo);
  if (!result.ok()) return result.status();
  FitOutcome out;
  out.status = "optimal";
  out.objective = result->objective;
  out.best_bound = result->objective;
  out.nodes = result->partitions;
  out.wall_time = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out.message = absl::StrCat(result->leaf_fits, " leaf fits, ",
                             result->partitions, " partitions");
  out.model = std::move(result->model);
  return out;
}

}  // namespace

std::string EngineName(Engine engine) {
  return engine == Engine::kMip ? "mip" : "oracle";
}

absl::StatusOr<Engine> ParseEngine(absl::string_view name) {
  if (name == "mip") return Engine::kMip;
  if (name == "oracle") return Engine::kOracle;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown engine '", name, "' (mip|oracle)"));
}

absl::StatusOr<double> TrainingMae(const tree::PwPolyModel& model,
                                   const functions::SampleSet& samples) {
  if (samples.size() == 0) return absl::InvalidArgumentError("no samples");
  double total = 0.0;
  for (int i = 0; i < samples.size(); ++i) {
    absl::StatusOr<double> p = model.Predict(samples.point(i));
    if (!p.ok()) return p.status();
    total += std::abs(samples.values[i] - *p);
  }
  return total / samples.size();
}

absl::StatusOr<FitOutcome> Fit(const functions::SampleSet& samples,
                               const FitOptions& options) {
  if (absl::Status st = options.params.Validate(); !st.ok()) return st;
  if (absl::Status st = options.solver.Validate(); !st.ok()) return st;
  if (options.engine == Engine::kOracle) {
    if (options.solution_text) {
      return absl::InvalidArgumentError(
          "an external solution needs the mip engine");
    }
    return FitOracle(samples, options);
  }
  if (options.loss != oracle::Loss::kMae) {
    return absl::InvalidArgumentError(
        "the MIP minimizes the mean absolute error only");
  }
  absl::StatusOr<formulation::MipModel> model =
      formulation::BuildFormulation(options.formulation, samples,
                                    options.params);
  if (!model.ok()) return model.status();

  FitOutcome out;
  out.objective = kNan;
  out.best_bound = kNan;
  out.gap = kNan;
  if (options.export_mps) out.mps = formulation::ExportMps(*model);

  std::optional<formulation::Assignment> incumbent;
  if (options.solution_text) {
    solver::SolutionImportOptions io;
    io.name_table = options.solution_name_table;
    absl::StatusOr<formulation::Assignment> imported =
        solver::ImportSolution(*model, *options.solution_text, io);
    if (!imported.ok()) return imported.status();
    absl::StatusOr<formulation::FeasibilityReport> report =
        formulation::CheckFeasible(*model, *imported);
    if (!report.ok()) return report.status();
    out.status = "imported";
    out.objective = report->objective;
    incumbent = *std::move(imported);
  } else {
    absl::StatusOr<solver::MipResult> result =
        solver::SolveMip(*model, options.solver);
    if (!result.ok()) {
      if (absl::IsResourceExhausted(result.status())) {
        out.status = "resource_exhausted";
        out.message = std::string(result.status().message());
        return out;
      }
      return result.status();
    }
    out.status = solver::MipStatusName(result->status);
    out.best_bound = result->best_bound;
    out.gap = result->gap;
    out.nodes = result->nodes;
    out.lp_iterations = result->lp_iterations;
    out.wall_time = result->wall_time;
    out.message = result->message;
    if (result->incumbent) {
      out.objective = result->objective;
      incumbent = std::move(result->incumbent);
    }
  }
  if (incumbent) {
    absl::StatusOr<tree::PwPolyModel> decoded =
        formulation::Decode(*model, *incumbent, samples, options.params);
    if (!decoded.ok()) return decoded.status();
    out.model = *std::move(decoded);
  }
  return out;
}

}  // namespace pwtame::experiments
