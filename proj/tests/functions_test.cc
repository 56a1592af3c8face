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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "absl/strings/match.h"
#include "gtest/gtest.h"
#include "pwtame/functions/domain.h"
#include "pwtame/functions/grid_signal.h"
#include "pwtame/functions/rng.h"
#include "pwtame/functions/sample_set.h"
#include "pwtame/functions/sampling.h"
#include "pwtame/functions/test_functions.h"
#include "test_util.h"

namespace pwtame::functions {
namespace {

TEST(EvalL1Test, Examples) {
  EXPECT_EQ(EvalL1(std::array<double, 2>{0.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(EvalL1(std::array<double, 2>{0.3, -0.4}), 0.7);
  EXPECT_EQ(EvalL1(std::array<double, 3>{1.0, 1.0, 1.0}), 3.0);
}

TEST(EvalLinfTest, Examples) {
  EXPECT_EQ(EvalLinf(std::array<double, 2>{0.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(EvalLinf(std::array<double, 2>{0.3, -0.4}), 0.4);
  EXPECT_EQ(EvalLinf(std::array<double, 2>{-1.0, 0.5}), 1.0);
}

TEST(EvalConeTest, Examples) {
  // Along the ray the function equals -s x1.
  EXPECT_DOUBLE_EQ(EvalCone(std::array<double, 2>{1.0, 0.0}, 0.5, 0.5), -0.5);
  // -0.5 x1 + 3 x2 at (1, 0.25).
  EXPECT_DOUBLE_EQ(EvalCone(std::array<double, 2>{1.0, 0.25}, 0.5, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(EvalCone(std::array<double, 2>{-1.0, 0.3}, 0.5, 0.5), 1.0);
}

// The seven smooth pieces of the cone with r = s = 0.5, described by their
// geometry and the linear expression on each.
struct ConeCell {
  const char* name;
  std::function<bool(double, double)> contains;
  std::function<double(double, double)> value;
};

TEST(EvalConeTest, MatchesLinearExpressionOnEveryCell) {
  const std::vector<ConeCell> cells = {
      {"left", [](double a, double b) { return a < -std::abs(b); },
       [](double a, double) { return -a; }},
      {"top", [](double a, double b) { return b > std::abs(a); },
       [](double, double b) { return b; }},
      {"bottom", [](double a, double b) { return b < -std::abs(a); },
       [](double, double b) { return -b; }},
      {"right upper",
       [](double a, double b) { return a > std::abs(b) && b > 0.5 * a; },
       [](double a, double) { return a; }},
      {"right lower",
       [](double a, double b) { return a > std::abs(b) && -b > 0.5 * a; },
       [](double a, double) { return a; }},
      {"cone upper",
       [](double a, double b) { return a > 0 && b > 0 && b < 0.5 * a; },
       [](double a, double b) { return -0.5 * a + 3 * b; }},
      {"cone lower",
       [](double a, double b) { return a > 0 && b < 0 && -b < 0.5 * a; },
       [](double a, double b) { return -0.5 * a - 3 * b; }},
  };
  Rng rng(7);
  for (const ConeCell& cell : cells) {
    int hits = 0;
    while (hits < 100) {
      const double a = 2 * rng.Uniform() - 1, b = 2 * rng.Uniform() - 1;
      if (!cell.contains(a, b)) continue;
      ++hits;
      EXPECT_NEAR(EvalCone(std::array<double, 2>{a, b}, 0.5, 0.5),
                  cell.value(a, b), 1e-12)
          << cell.name << " at (" << a << ", " << b << ")";
    }
  }
}

TEST(EvalConeTest, ZeroSlopeNeverExceedsLinf) {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const std::array<double, 2> x = {2 * rng.Uniform() - 1,
                                     2 * rng.Uniform() - 1};
    const double cone = EvalCone(x, 0.5, 0.0);
    EXPECT_LE(cone, EvalLinf(x) + 1e-12);
    const bool in_cone = x[0] > 0 && std::abs(x[1]) < 0.5 * x[0];
    if (!in_cone) {
      EXPECT_DOUBLE_EQ(cone, EvalLinf(x));
    }
  }
}

TEST(NormTest, LipschitzInDualNorms) {
  Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    std::array<double, 3> x, y;
    double l1 = 0.0, linf = 0.0;
    for (int j = 0; j < 3; ++j) {
      x[j] = 4 * rng.Uniform() - 2;
      y[j] = 4 * rng.Uniform() - 2;
      l1 += std::abs(x[j] - y[j]);
      linf = std::max(linf, std::abs(x[j] - y[j]));
    }
    EXPECT_LE(std::abs(EvalLinf(x) - EvalLinf(y)), l1 + 1e-12);
    EXPECT_LE(std::abs(EvalL1(x) - EvalL1(y)), 3 * linf + 1e-12);
  }
}

TEST(RngTest, PinnedBitStream) {
  // The 10000th output of mt19937_64 with the default seed is fixed by the
  // C++ standard.
  Rng rng(5489);
  uint64_t v = 0;
  for (int k = 0; k < 10000; ++k) v = rng.NextBits();
  EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(RngTest, NormalMoments) {
  Rng rng(1);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < n; ++k) {
    const double z = rng.Normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(DomainTest, Parse) {
  absl::StatusOr<Domain> d = ParseDomain("0±1", 2);
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->center, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(d->radius, 1.0);
  d = ParseDomain("0.5,-1+-2", 2);
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->center, (std::vector<double>{0.5, -1.0}));
  EXPECT_EQ(d->radius, 2.0);
  EXPECT_FALSE(ParseDomain("0,1,2±1", 2).ok());
  EXPECT_FALSE(ParseDomain("0±-1", 2).ok());
  EXPECT_FALSE(ParseDomain("0-1", 2).ok());
}

Domain Square() { return *ParseDomain("0±1", 2); }

TEST(SampleUniformTest, SinglePointInRange) {
  absl::StatusOr<SampleSet> s =
      SampleUniform(*MakeTestFunction(FunctionKind::kL1), Square(), 1, 42);
  ASSERT_TRUE(s.ok()) << s.status();
  ASSERT_EQ(s->size(), 1);
  for (double u : s->points) {
    EXPECT_GE(u, 0.0);
    EXPECT_LE(u, 1.0);
  }
  EXPECT_GE(s->values[0], 0.0);
  EXPECT_LE(s->values[0], 2.0);
}

TEST(SampleUniformTest, Deterministic) {
  const TestFunction f = *MakeTestFunction(FunctionKind::kCone);
  absl::StatusOr<SampleSet> a = SampleUniform(f, Square(), 250, 9);
  absl::StatusOr<SampleSet> b = SampleUniform(f, Square(), 250, 9);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->points, b->points);
  EXPECT_EQ(a->values, b->values);
  absl::StatusOr<SampleSet> c = SampleUniform(f, Square(), 250, 10);
  EXPECT_NE(a->points, c->points);
}

TEST(SampleUniformTest, CoordinatesOnFourDecimalGrid) {
  absl::StatusOr<SampleSet> s =
      SampleUniform(*MakeTestFunction(FunctionKind::kLinf), Square(), 250, 1);
  ASSERT_TRUE(s.ok());
  for (double u : s->points) {
    EXPECT_NEAR(u * 1e4, std::round(u * 1e4), 1e-6) << u;
  }
}

TEST(SampleUniformTest, ScalingRoundTrip) {
  absl::StatusOr<SampleSet> s =
      SampleUniform(*MakeTestFunction(FunctionKind::kL1),
                    *ParseDomain("0.5,-1±2", 2), 300, 5);
  ASSERT_TRUE(s.ok());
  for (int i = 0; i < s->size(); ++i) {
    const std::vector<double> x = s->transform.FromUnit(s->point(i));
    for (int j = 0; j < 2; ++j) {
      // Rounding moves the unit coordinate by at most 5e-5, i.e. 2 * radius
      // times that in the domain.
      EXPECT_LE(std::abs(x[j] - s->raw_point(i)[j]), 4 * 5e-5 + 1e-12);
    }
  }
}

TEST(SampleUniformTest, LabelSources) {
  const TestFunction f = *MakeTestFunction(FunctionKind::kL1);
  SamplingOptions raw;
  raw.labels = LabelSource::kRawPoint;
  absl::StatusOr<SampleSet> a = SampleUniform(f, Square(), 50, 3, raw);
  absl::StatusOr<SampleSet> b = SampleUniform(f, Square(), 50, 3);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->points, b->points);
  for (int i = 0; i < a->size(); ++i) {
    EXPECT_EQ(a->values[i], f(a->raw_point(i)));
    EXPECT_EQ(b->values[i], f(b->transform.FromUnit(b->point(i))));
  }
}

TEST(SampleUniformTest, NonFiniteValueNamesThePoint) {
  const TestFunction bad = [](std::span<const double>) { return NAN; };
  absl::StatusOr<SampleSet> s = SampleUniform(bad, Square(), 3, 1);
  ASSERT_FALSE(s.ok());
  EXPECT_TRUE(absl::StrContains(s.status().message(), "sample 0"));
}

TEST(SampleUniformTest, RejectsEmpty) {
  EXPECT_FALSE(
      SampleUniform(*MakeTestFunction(FunctionKind::kL1), Square(), 0, 1).ok());
}

TEST(GridSignalTest, NoiselessSingleBlock) {
  GridSignalSpec spec;
  spec.grid_size = 2;
  spec.blocks = {{0, 2, 0, 2, 5.0}};
  spec.noise_sigma = 0.0;
  absl::StatusOr<SampleSet> s = MakeGridSignal(spec);
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->values, (std::vector<double>{5, 5, 5, 5}));
  EXPECT_EQ(s->points, (std::vector<double>{0.25, 0.25, 0.75, 0.25, 0.25,
                                            0.75, 0.75, 0.75}));
}

TEST(GridSignalTest, FullSizeGridHas625Samples) {
  GridSignalSpec spec;
  spec.grid_size = 25;
  spec.blocks = *PresetBlocks("quadrants", 25);
  absl::StatusOr<SampleSet> s = MakeGridSignal(spec);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->size(), 625);
}

TEST(GridSignalTest, QuadrantValues) {
  GridSignalSpec spec;
  spec.grid_size = 8;
  spec.noise_sigma = 0.0;
  spec.blocks = *PresetBlocks("quadrants", 8);
  absl::StatusOr<SampleSet> s = MakeGridSignal(spec);
  ASSERT_TRUE(s.ok());
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const double expected = (r >= 4 ? 2.0 : 0.0) + (c >= 4 ? 1.0 : 0.0);
      EXPECT_EQ(s->values[r * 8 + c], expected);
    }
  }
}

TEST(GridSignalTest, NoiseIsSeeded) {
  GridSignalSpec spec;
  spec.grid_size = 8;
  spec.blocks = *PresetBlocks("bands", 8);
  spec.seed = 4;
  absl::StatusOr<SampleSet> a = MakeGridSignal(spec);
  absl::StatusOr<SampleSet> b = MakeGridSignal(spec);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->values, b->values);
}

TEST(GridSignalTest, RejectsOverlapAndGaps) {
  GridSignalSpec spec;
  spec.grid_size = 4;
  spec.blocks = {{0, 4, 0, 3, 0.0}, {0, 4, 2, 4, 1.0}};
  EXPECT_FALSE(MakeGridSignal(spec).ok());
  spec.blocks = {{0, 4, 0, 2, 0.0}};
  EXPECT_FALSE(MakeGridSignal(spec).ok());
  spec.grid_size = 1;
  spec.blocks = {{0, 1, 0, 1, 0.0}};
  EXPECT_FALSE(MakeGridSignal(spec).ok());
}

TEST(GridSignalTest, PresetsTile) {
  for (const char* name : {"quadrants", "bands", "square", "steps"}) {
    GridSignalSpec spec;
    spec.grid_size = 25;
    spec.blocks = *PresetBlocks(name, 25);
    EXPECT_TRUE(spec.Validate().ok()) << name;
  }
  EXPECT_FALSE(PresetBlocks("nope", 25).ok());
}

TEST(SampleCsvTest, FormatAndRoundTrip) {
  SampleSet s = testing::MakeSamples(2, {{0.1, 0.25}, {1.0, 0.0}},
                                     {1.0 / 3.0, -2.5});
  const std::string csv = WriteSampleCsv(s);
  EXPECT_EQ(csv, "x1,x2,y\n0.1000,0.2500,0.333333333333\n1.0000,0.0000,-2.5\n");
  absl::StatusOr<SampleSet> back = ReadSampleCsv(csv);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->dimension, 2);
  EXPECT_EQ(back->points, s.points);
  EXPECT_NEAR(back->values[0], 1.0 / 3.0, 1e-12);
  EXPECT_FALSE(ReadSampleCsv("x1,y\n0.5\n").ok());
  EXPECT_FALSE(ReadSampleCsv("x1,y\n1.5,0\n").ok());
}

TEST(FunctionKindTest, Names) {
  for (FunctionKind k : {FunctionKind::kL1, FunctionKind::kLinf,
                         FunctionKind::kCone, FunctionKind::kGrid}) {
    EXPECT_EQ(*ParseFunctionKind(FunctionKindName(k)), k);
  }
  EXPECT_FALSE(ParseFunctionKind("l2").ok());
  EXPECT_FALSE(MakeTestFunction(FunctionKind::kCone, {0.0, 0.5}).ok());
  EXPECT_FALSE(MakeTestFunction(FunctionKind::kGrid).ok());
}

}  // namespace
}  // namespace pwtame::functions
