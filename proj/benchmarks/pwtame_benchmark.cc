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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "pwtame/formulation/builder.h"
#include "pwtame/formulation/mps.h"
#include "pwtame/functions/domain.h"
#include "pwtame/functions/sampling.h"
#include "pwtame/functions/test_functions.h"
#include "pwtame/oracle/oracle.h"
#include "pwtame/solver/branch_and_bound.h"
#include "pwtame/solver/lp.h"
#include "pwtame/tree/monomial_basis.h"

namespace pwtame {
namespace {

functions::SampleSet Samples(functions::FunctionKind kind, int n) {
  const functions::TestFunction f = *functions::MakeTestFunction(kind);
  const functions::Domain domain = *functions::ParseDomain("0+-1", 2);
  return *functions::SampleUniform(f, domain, n, 1);
}

formulation::Hyperparams Params(int depth, int degree) {
  formulation::Hyperparams p;
  p.depth = depth;
  p.degree = degree;
  return p;
}

void BM_BuildAxisAligned(benchmark::State& state) {
  const functions::SampleSet s =
      Samples(functions::FunctionKind::kL1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(formulation::BuildAxisAligned(s, Params(2, 1)));
  }
}
BENCHMARK(BM_BuildAxisAligned)->Arg(30)->Arg(250);

void BM_ExportMps(benchmark::State& state) {
  const formulation::MipModel m = *formulation::BuildAxisAligned(
      Samples(functions::FunctionKind::kL1, 250), Params(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(formulation::ExportMps(m));
}
BENCHMARK(BM_ExportMps);

void BM_RootRelaxation(benchmark::State& state) {
  const formulation::MipModel m = *formulation::BuildAxisAligned(
      Samples(functions::FunctionKind::kCone, static_cast<int>(state.range(0))),
      Params(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(solver::SolveRelaxation(m));
}
BENCHMARK(BM_RootRelaxation)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SolveMipL1(benchmark::State& state) {
  const formulation::MipModel m = *formulation::BuildAxisAligned(
      Samples(functions::FunctionKind::kL1, static_cast<int>(state.range(0))),
      Params(1, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver::SolveMip(m, solver::SolverConfig{}));
  }
}
BENCHMARK(BM_SolveMipL1)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const functions::SampleSet s =
      Samples(functions::FunctionKind::kCone, static_cast<int>(state.range(0)));
  oracle::OracleOptions options;
  options.depth = 2;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::EnumerateAxisTrees(s, options));
}
BENCHMARK(BM_Oracle)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_MonomialEvaluate(benchmark::State& state) {
  const tree::MonomialBasis basis(3, static_cast<int>(state.range(0)));
  const std::vector<double> x = {0.3, 0.7, 0.1};
  std::vector<double> out(basis.size());
  for (auto _ : state) {
    basis.Evaluate(x, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_MonomialEvaluate)->Arg(1)->Arg(3)->Arg(6);

}  // namespace
}  // namespace pwtame

BENCHMARK_MAIN();
