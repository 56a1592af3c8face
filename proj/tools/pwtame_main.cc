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

// Command-line front end: sample, fit and run.
//
// Exit codes: 0 optimal (or imported solution), 2 limit reached with an
// incumbent, 3 infeasible, 4 no model (limit or memory cap before any
// incumbent), 1 any other error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_format.h"
#include "pwtame/experiments/fit.h"
#include "pwtame/experiments/scenario.h"
#include "pwtame/formulation/hyperparams.h"
#include "pwtame/functions/domain.h"
#include "pwtame/functions/grid_signal.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/functions/sampling.h"
#include "pwtame/functions/test_functions.h"
#include "pwtame/oracle/oracle.h"
#include "pwtame/tree/model_io.h"

namespace pwtame {
namespace {

using experiments::ReadTextFile;
using experiments::WriteTextFile;

int ExitCodeFor(const std::string& status) {
  if (status == "optimal" || status == "imported") return 0;
  if (status == "feasible_time_limit") return 2;
  if (status == "infeasible") return 3;
  if (status == "limit_no_incumbent" || status == "resource_exhausted") {
    return 4;
  }
  return 1;
}

int Fail(const absl::Status& status) {
  std::fprintf(stderr, "pwtame: %s\n", status.ToString().c_str());
  return 1;
}

struct SampleArgs {
  std::string fn = "l1";
  int n = 250;
  uint64_t seed = 0;
  std::string dom = "0+-1";
  double cone_r = 0.5;
  double cone_s = 0.5;
  std::string labels = "rounded";
  int grid_size = 25;
  std::string preset = "quadrants";
  double sigma = 0.5;
  std::string output;
};

int RunSample(const SampleArgs& a) {
  absl::StatusOr<functions::FunctionKind> kind =
      functions::ParseFunctionKind(a.fn);
  if (!kind.ok()) return Fail(kind.status());
  absl::StatusOr<functions::SampleSet> samples;
  if (*kind == functions::FunctionKind::kGrid) {
    functions::GridSignalSpec spec;
    spec.grid_size = a.grid_size;
    spec.noise_sigma = a.sigma;
    spec.seed = a.seed;
    absl::StatusOr<std::vector<functions::GridBlock>> blocks =
        functions::PresetBlocks(a.preset, a.grid_size);
    if (!blocks.ok()) return Fail(blocks.status());
    spec.blocks = *std::move(blocks);
    samples = functions::MakeGridSignal(spec);
  } else {
    absl::StatusOr<functions::TestFunction> f =
        functions::MakeTestFunction(*kind, {a.cone_r, a.cone_s});
    if (!f.ok()) return Fail(f.status());
    absl::StatusOr<functions::Domain> domain = functions::ParseDomain(a.dom, 2);
    if (!domain.ok()) return Fail(domain.status());
    functions::SamplingOptions options;
    options.labels = a.labels == "raw" ? functions::LabelSource::kRawPoint
                                       : functions::LabelSource::kRoundedPoint;
    samples = functions::SampleUniform(*f, *domain, a.n, a.seed, options);
  }
  if (!samples.ok()) return Fail(samples.status());
  const std::string csv = functions::WriteSampleCsv(*samples);
  if (a.output.empty() || a.output == "-") {
    std::fputs(csv.c_str(), stdout);
    return 0;
  }
  if (absl::Status st = WriteTextFile(a.output, csv); !st.ok()) return Fail(st);
  std::printf("wrote %d samples to %s\n", samples->size(), a.output.c_str());
  return 0;
}

struct FitArgs {
  std::string formulation = "axis";
  std::string engine = "mip";
  std::string loss = "mae";
  int depth = 2;
  int nmin = 1;
  int degree = 1;
  double mu = 1e-4;
  std::optional<double> big_m;
  std::optional<double> coeff_bound;
  double time_limit = 300.0;
  double gap = 1e-6;
  std::optional<int64_t> node_limit;
  int threads = 1;
  bool override_guard = false;
  std::string mps_out;
  std::string names;
  std::string sol_in;
  std::string input;
  std::string output;
};

std::string SidecarPath(const std::string& mps_path) {
  std::filesystem::path p(mps_path);
  return (p.parent_path() / (p.stem().string() + "_names.csv")).string();
}

int RunFit(const FitArgs& a) {
  experiments::FitOptions options;
  absl::StatusOr<formulation::FormulationKind> kind =
      formulation::ParseFormulation(a.formulation);
  if (!kind.ok()) return Fail(kind.status());
  options.formulation = *kind;
  absl::StatusOr<experiments::Engine> engine = experiments::ParseEngine(a.engine);
  if (!engine.ok()) return Fail(engine.status());
  options.engine = *engine;
  absl::StatusOr<oracle::Loss> loss = oracle::ParseLoss(a.loss);
  if (!loss.ok()) return Fail(loss.status());
  options.loss = *loss;
  options.params.depth = a.depth;
  options.params.min_leaf_points = a.nmin;
  options.params.degree = a.degree;
  options.params.mu = a.mu;
  options.params.big_m = a.big_m;
  options.params.coeff_bound = a.coeff_bound;
  options.solver.time_limit = a.time_limit;
  options.solver.gap_tolerance = a.gap;
  if (a.node_limit) options.solver.node_limit = *a.node_limit;
  options.solver.threads = a.threads;
  options.solver.deterministic = a.threads == 1;
  options.override_guard = a.override_guard;
  options.export_mps = !a.mps_out.empty();
  if (!a.sol_in.empty()) {
    absl::StatusOr<std::string> text = ReadTextFile(a.sol_in);
    if (!text.ok()) return Fail(text.status());
    options.solution_text = *std::move(text);
    if (!a.names.empty()) {
      absl::StatusOr<std::string> table = ReadTextFile(a.names);
      if (!table.ok()) return Fail(table.status());
      options.solution_name_table = *std::move(table);
    }
  }
  absl::StatusOr<std::string> csv = ReadTextFile(a.input);
  if (!csv.ok()) return Fail(csv.status());
  absl::StatusOr<functions::SampleSet> samples = functions::ReadSampleCsv(*csv);
  if (!samples.ok()) return Fail(samples.status());

  absl::StatusOr<experiments::FitOutcome> out =
      experiments::Fit(*samples, options);
  if (!out.ok()) return Fail(out.status());
  if (out->mps) {
    const std::string sidecar = a.names.empty() || !a.sol_in.empty()
                                    ? SidecarPath(a.mps_out)
                                    : a.names;
    if (absl::Status st = WriteTextFile(a.mps_out, out->mps->mps); !st.ok()) {
      return Fail(st);
    }
    if (absl::Status st = WriteTextFile(sidecar, out->mps->name_table);
        !st.ok()) {
      return Fail(st);
    }
    std::printf("wrote %s and %s\n", a.mps_out.c_str(), sidecar.c_str());
  }
  std::printf("status %s  objective %.10g  bound %.10g  gap %.3g  nodes %lld  "
              "time %.2fs\n",
              out->status.c_str(), out->objective, out->best_bound, out->gap,
              static_cast<long long>(out->nodes), out->wall_time);
  if (!out->message.empty()) std::printf("%s\n", out->message.c_str());
  if (out->model) {
    if (!a.output.empty()) {
      if (absl::Status st =
              WriteTextFile(a.output, tree::ModelToJson(*out->model));
          !st.ok()) {
        return Fail(st);
      }
      std::printf("wrote model to %s\n", a.output.c_str());
    }
  }
  return ExitCodeFor(out->status);
}

struct RunArgs {
  std::string scenario;
  bool paper_scale = false;
  std::string config;
  std::string out_root = "out";
  bool dump_config = false;
};

int RunRun(const RunArgs& a) {
  absl::StatusOr<experiments::ScenarioConfig> config =
      experiments::DefaultScenario(a.scenario, a.paper_scale);
  if (!config.ok()) return Fail(config.status());
  if (!a.config.empty()) {
    absl::StatusOr<std::string> text = ReadTextFile(a.config);
    if (!text.ok()) return Fail(text.status());
    config = experiments::ParseScenarioConfig(*text, *std::move(config));
    if (!config.ok()) return Fail(config.status());
  }
  if (a.dump_config) {
    std::fputs(experiments::ScenarioConfigToText(*config).c_str(), stdout);
    return 0;
  }
  absl::StatusOr<experiments::ScenarioRun> run =
      experiments::RunScenario(*config);
  if (!run.ok()) return Fail(run.status());
  const std::string dir =
      (std::filesystem::path(a.out_root) / a.scenario).string();
  if (absl::Status st = experiments::WriteScenarioOutputs(*run, dir); !st.ok()) {
    return Fail(st);
  }
  const experiments::Report& r = run->report;
  std::printf("%s: status %s  objective %.10g  gap %.3g  nodes %lld  time %.2fs\n",
              a.scenario.c_str(), r.status.c_str(), r.objective, r.gap,
              static_cast<long long>(r.nodes), r.wall_time);
  if (r.training_mae) std::printf("training MAE %.10g\n", *r.training_mae);
  if (r.grid_sup_error) {
    std::printf("grid sup-norm error %.6g\n", *r.grid_sup_error);
  }
  for (size_t k = 0; k < r.blocks.size(); ++k) {
    const experiments::BlockResult& b = r.blocks[k];
    std::printf("block %zu: truth %g recovered %.6g error %.3g tolerance %.3g%s\n",
                k, b.truth, b.recovered, b.error, b.tolerance,
                b.within ? "" : "  (outside)");
  }
  std::printf("outputs in %s\n", dir.c_str());
  return ExitCodeFor(r.status);
}

}  // namespace
}  // namespace pwtame

int main(int argc, char** argv) {
  CLI::App app{"Optimal piecewise-polynomial regression trees"};
  app.require_subcommand(1);

  pwtame::SampleArgs sample;
  CLI::App* s = app.add_subcommand("sample", "Sample a test function");
  s->add_option("--fn", sample.fn, "l1|linf|cone|grid")->capture_default_str();
  s->add_option("--n", sample.n, "Number of samples")->capture_default_str();
  s->add_option("--seed", sample.seed, "Random seed")->capture_default_str();
  s->add_option("--dom", sample.dom, "Domain c±r (or c+-r)")
      ->capture_default_str();
  s->add_option("--cone-r", sample.cone_r)->capture_default_str();
  s->add_option("--cone-s", sample.cone_s)->capture_default_str();
  s->add_option("--labels", sample.labels,
                "rounded: f at the rounded point; raw: f before rounding")
      ->check(CLI::IsMember({"rounded", "raw"}))
      ->capture_default_str();
  s->add_option("--grid-size", sample.grid_size, "Grid signal size")
      ->capture_default_str();
  s->add_option("--preset", sample.preset, "quadrants|bands|square|steps")
      ->capture_default_str();
  s->add_option("--sigma", sample.sigma, "Grid noise level")
      ->capture_default_str();
  s->add_option("-o,--output", sample.output, "CSV path ('-' for stdout)");

  pwtame::FitArgs fit;
  CLI::App* f = app.add_subcommand("fit", "Fit a regression tree");
  f->add_option("--formulation", fit.formulation, "axis|hplane")
      ->capture_default_str();
  f->add_option("--engine", fit.engine, "mip|oracle")->capture_default_str();
  f->add_option("--loss", fit.loss, "mae|mse (mse: oracle only)")
      ->capture_default_str();
  f->add_option("--depth", fit.depth)->capture_default_str();
  f->add_option("--nmin", fit.nmin, "Minimum points per nonempty leaf")
      ->capture_default_str();
  f->add_option("--degree", fit.degree)->capture_default_str();
  f->add_option("--mu", fit.mu, "Hyperplane margin")->capture_default_str();
  f->add_option("--big-m", fit.big_m);
  f->add_option("--coeff-bound", fit.coeff_bound);
  f->add_option("--time-limit", fit.time_limit, "Seconds")
      ->capture_default_str();
  f->add_option("--gap", fit.gap, "Relative gap tolerance")
      ->capture_default_str();
  f->add_option("--node-limit", fit.node_limit);
  f->add_option("--threads", fit.threads,
                "Worker threads (1 = deterministic)")
      ->capture_default_str();
  f->add_flag("--override-guard", fit.override_guard,
              "Let the oracle exceed its size guard");
  f->add_option("--mps-out", fit.mps_out,
                "Write the MIP in fixed MPS plus a <stem>_names.csv sidecar");
  f->add_option("--names", fit.names, "Name table for --sol-in");
  f->add_option("--sol-in", fit.sol_in,
                "Decode this external solution instead of solving");
  f->add_option("-i,--input", fit.input, "Sample CSV")->required();
  f->add_option("-o,--output", fit.output, "Model JSON");

  pwtame::RunArgs run;
  CLI::App* r = app.add_subcommand("run", "Run an experiment scenario");
  r->add_option("--scenario", run.scenario)
      ->required()
      ->check(CLI::IsMember({"l1", "linf", "cone", "cone-d3", "denoise"}));
  r->add_flag("--paper-scale", run.paper_scale,
              "n = 250 (25x25 grid for denoise), MPS export");
  r->add_option("--config", run.config, "TOML-style overrides");
  r->add_option("--out", run.out_root, "Output root")->capture_default_str();
  r->add_flag("--dump-config", run.dump_config,
              "Print the effective configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every usage error maps to the generic code 1.
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (s->parsed()) return pwtame::RunSample(sample);
  if (f->parsed()) return pwtame::RunFit(fit);
  return pwtame::RunRun(run);
}
