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

#include "test_util.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pwtame/functions/domain.h"
#include "pwtame/functions/sampling.h"

namespace pwtame::testing {

functions::SampleSet MakeSamples(int dimension,
                                 const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& values) {
  functions::SampleSet s;
  s.dimension = dimension;
  s.transform = functions::ScaleTransform::UnitCube(dimension);
  for (const std::vector<double>& p : points) {
    s.points.insert(s.points.end(), p.begin(), p.end());
  }
  s.values = values;
  s.raw_points = s.points;
  return s;
}

functions::SampleSet SampleFunction(functions::FunctionKind kind, int n,
                                    uint64_t seed) {
  absl::StatusOr<functions::TestFunction> f = functions::MakeTestFunction(kind);
  absl::StatusOr<functions::Domain> dom = functions::ParseDomain("0+-1", 2);
  absl::StatusOr<functions::SampleSet> s =
      functions::SampleUniform(*f, *dom, n, seed);
  if (!s.ok()) {
    std::cerr << s.status() << "\n";
    std::abort();
  }
  return *std::move(s);
}

functions::SampleSet QuadrantL1Samples() {
  const std::vector<std::vector<double>> points = {
      {0.1, 0.2}, {0.7, 0.1}, {0.3, 0.9}, {0.95, 0.6}};
  std::vector<double> values;
  for (const std::vector<double>& u : points) {
    // Unit coordinates map to x = 2u - 1 on [-1,1]^2.
    const double x[2] = {2 * u[0] - 1, 2 * u[1] - 1};
    values.push_back(functions::EvalL1(x));
  }
  functions::SampleSet s = MakeSamples(2, points, values);
  s.transform = functions::ScaleTransform{{0.0, 0.0}, 1.0};
  return s;
}

formulation::Hyperparams Params(int depth, int degree, int min_leaf_points) {
  formulation::Hyperparams h;
  h.depth = depth;
  h.degree = degree;
  h.min_leaf_points = min_leaf_points;
  return h;
}

std::string ReadFileOrDie(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::abort();
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace pwtame::testing
