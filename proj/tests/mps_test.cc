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
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"

#include "gtest/gtest.h"
#include "pwtame/formulation/builder.h"
#include "pwtame/formulation/mps.h"
#include "test_util.h"

namespace pwtame::formulation {
namespace {

// Two points x = 0.25, 0.75 with y = 1, -0.5; one axis split, constant leaves.
functions::SampleSet TinySamples() {
  return testing::MakeSamples(1, {{0.25}, {0.75}}, {1.0, -0.5});
}

void ExpectSameModel(const MipModel& a, const MipModel& b) {
  ASSERT_EQ(a.num_variables(), b.num_variables());
  ASSERT_EQ(a.num_constraints(), b.num_constraints());
  for (int j = 0; j < a.num_variables(); ++j) {
    EXPECT_EQ(a.variable(j).name, b.variable(j).name);
    EXPECT_EQ(a.variable(j).lower, b.variable(j).lower) << a.variable(j).name;
    EXPECT_EQ(a.variable(j).upper, b.variable(j).upper) << a.variable(j).name;
    EXPECT_EQ(a.variable(j).type, b.variable(j).type) << a.variable(j).name;
    EXPECT_EQ(a.objective()[j], b.objective()[j]);
  }
  for (int i = 0; i < a.num_constraints(); ++i) {
    const Constraint& ca = a.constraint(i);
    const Constraint& cb = b.constraint(i);
    EXPECT_EQ(ca.name, cb.name);
    EXPECT_EQ(ca.sense, cb.sense) << ca.name;
    EXPECT_EQ(ca.rhs, cb.rhs) << ca.name;
    ASSERT_EQ(ca.terms.size(), cb.terms.size()) << ca.name;
    // Export is column-major, so terms come back sorted by variable.
    std::vector<std::pair<int, double>> ta, tb;
    for (const Term& t : ca.terms) ta.push_back({t.var, t.coeff});
    for (const Term& t : cb.terms) tb.push_back({t.var, t.coeff});
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    EXPECT_EQ(ta, tb) << ca.name;
  }
}

TEST(MpsTest, TinyModelMatchesGoldenFiles) {
  MipModel m = *BuildAxisAligned(TinySamples(), testing::Params(1, 0));
  MpsFiles files = ExportMps(m, "TINY");
  EXPECT_EQ(files.mps, testing::ReadFileOrDie(
                           absl::StrCat(PWTAME_TEST_DATA_DIR, "/tiny_axis.mps")));
  EXPECT_EQ(files.name_table,
            testing::ReadFileOrDie(
                absl::StrCat(PWTAME_TEST_DATA_DIR, "/tiny_axis_names.csv")));
}

TEST(MpsTest, GoldenFileImportsToTheBuiltModel) {
  MipModel built = *BuildAxisAligned(TinySamples(), testing::Params(1, 0));
  absl::StatusOr<MipModel> read = ImportMps(
      testing::ReadFileOrDie(absl::StrCat(PWTAME_TEST_DATA_DIR, "/tiny_axis.mps")),
      testing::ReadFileOrDie(
          absl::StrCat(PWTAME_TEST_DATA_DIR, "/tiny_axis_names.csv")));
  ASSERT_TRUE(read.ok()) << read.status();
  ExpectSameModel(built, *read);
}

TEST(MpsTest, RoundTripsLargerModels) {
  for (FormulationKind kind :
       {FormulationKind::kAxisAligned, FormulationKind::kHyperplane}) {
    functions::SampleSet s =
        testing::SampleFunction(functions::FunctionKind::kCone, 25, 7);
    MipModel m = *BuildFormulation(kind, s, testing::Params(2, 2, 2));
    MpsFiles files = ExportMps(m);
    absl::StatusOr<MipModel> read = ImportMps(files.mps, files.name_table);
    ASSERT_TRUE(read.ok()) << read.status();
    ExpectSameModel(m, *read);
    EXPECT_EQ(ExportMps(*read).mps, files.mps);
  }
}

TEST(MpsTest, WithoutNameTableKeepsMangledNames) {
  MipModel m = *BuildAxisAligned(TinySamples(), testing::Params(1, 0));
  absl::StatusOr<MipModel> read = ImportMps(ExportMps(m).mps);
  ASSERT_TRUE(read.ok());
  EXPECT_EQ(read->variable(0).name, "C0000001");
  EXPECT_EQ(read->constraint(0).name, "R0000001");
}

TEST(MpsTest, ReadsFreeFormExtras) {
  const std::string text =
      "NAME demo\n"
      "OBJSENSE\n"
      "    MAX\n"
      "ROWS\n"
      " N cost\n"
      " L lim\n"
      " G low\n"
      " E band\n"
      "COLUMNS\n"
      " x cost 1 lim 1\n"
      " x band 1\n"
      " MARKER 'MARKER' 'INTORG'\n"
      " y cost 2 low 1\n"
      " MARKER 'MARKER' 'INTEND'\n"
      " w lim 1\n"
      "RHS\n"
      " rhs lim 4 low 0.5\n"
      " rhs band 2\n"
      "RANGES\n"
      " rng band 3\n"
      "BOUNDS\n"
      " UP bnd x -1\n"
      " BV bnd w\n"
      "ENDATA\n";
  absl::StatusOr<MipModel> m = ImportMps(text);
  ASSERT_TRUE(m.ok()) << m.status();
  const int x = m->FindVariable("x"), y = m->FindVariable("y");
  const int w = m->FindVariable("w");
  EXPECT_EQ(m->objective()[x], -1.0);
  EXPECT_EQ(m->objective()[y], -2.0);
  EXPECT_EQ(m->variable(x).lower, -kInfinity);
  EXPECT_EQ(m->variable(x).upper, -1.0);
  EXPECT_EQ(m->variable(y).type, VarType::kBinary);
  EXPECT_EQ(m->variable(y).upper, 1.0);
  EXPECT_EQ(m->variable(w).type, VarType::kBinary);
  // The ranged equality row becomes 2 <= x <= 5.
  int band_rows = 0;
  for (const Constraint& c : m->constraints()) {
    if (c.name.rfind("band", 0) != 0) continue;
    ++band_rows;
    EXPECT_EQ(c.rhs, c.sense == Sense::kGreaterEqual ? 2.0 : 5.0);
  }
  EXPECT_EQ(band_rows, 2);
}

TEST(MpsTest, RejectsMalformedInput) {
  EXPECT_FALSE(ImportMps("NAME x\nROWS\n N obj\n").ok());
  EXPECT_FALSE(
      ImportMps("NAME x\nROWS\n N obj\nCOLUMNS\n x nope 1\nENDATA\n").ok());
  EXPECT_FALSE(ImportMps("NAME x\nROWS\n Q r\nENDATA\n").ok());
  EXPECT_FALSE(ImportMps("NAME x\nBOGUS\nENDATA\n").ok());
  EXPECT_FALSE(ImportMps("NAME x\nROWS\n N obj\nCOLUMNS\n"
                         " M 'MARKER' 'INTORG'\n x obj 1\n"
                         " M 'MARKER' 'INTEND'\nBOUNDS\n UP b x 5\nENDATA\n")
                   .ok());
  EXPECT_FALSE(ParseNameTable("mps_name,paper_symbol\nC1\n").ok());
}

}  // namespace
}  // namespace pwtame::formulation
