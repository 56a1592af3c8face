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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "pwtame/experiments/scenario.h"
#include "pwtame/functions/domain.h"

namespace pwtame::experiments {

namespace {

using functions::FunctionKind;

std::string LabelSourceName(functions::LabelSource source) {
  return source == functions::LabelSource::kRoundedPoint ? "rounded" : "raw";
}

absl::StatusOr<functions::LabelSource> ParseLabelSource(absl::string_view name) {
  if (name == "rounded") return functions::LabelSource::kRoundedPoint;
  if (name == "raw") return functions::LabelSource::kRawPoint;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown label source '", name, "' (rounded|raw)"));
}

// Value text of one `key = value` line.
struct Value {
  std::string text;
  bool quoted = false;
  int line = 0;
};

absl::Status ValueError(absl::string_view key, const Value& v,
                        absl::string_view expected) {
  return absl::InvalidArgumentError(absl::StrCat(
      "line ", v.line, ": ", key, " expects ", expected, ", got '", v.text, "'"));
}

absl::StatusOr<std::string> AsString(absl::string_view key, const Value& v) {
  if (!v.quoted) return ValueError(key, v, "a quoted string");
  return v.text;
}

absl::StatusOr<double> AsDouble(absl::string_view key, const Value& v) {
  double x = 0.0;
  if (v.quoted || !absl::SimpleAtod(v.text, &x)) {
    return ValueError(key, v, "a number");
  }
  return x;
}

absl::StatusOr<int64_t> AsInt(absl::string_view key, const Value& v) {
  int64_t x = 0;
  if (v.quoted || !absl::SimpleAtoi(v.text, &x)) {
    return ValueError(key, v, "an integer");
  }
  return x;
}

absl::StatusOr<bool> AsBool(absl::string_view key, const Value& v) {
  if (!v.quoted && v.text == "true") return true;
  if (!v.quoted && v.text == "false") return false;
  return ValueError(key, v, "true or false");
}

// Strips a trailing comment that is not inside a quoted string.
absl::string_view StripComment(absl::string_view line) {
  bool quoted = false;
  for (size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') quoted = !quoted;
    if (line[k] == '#' && !quoted) return line.substr(0, k);
  }
  return line;
}

absl::Status Apply(const std::string& key, const Value& v, ScenarioConfig& c) {
#define PWTAME_ASSIGN(lhs, expr)              \
  do {                                        \
    auto value_or = (expr);                   \
    if (!value_or.ok()) return value_or.status(); \
    lhs = *value_or;                          \
  } while (0)
  formulation::Hyperparams& h = c.fit.params;
  solver::SolverConfig& s = c.fit.solver;
  if (key == "name") {
    PWTAME_ASSIGN(c.name, AsString(key, v));
  } else if (key == "function") {
    std::string name;
    PWTAME_ASSIGN(name, AsString(key, v));
    PWTAME_ASSIGN(c.function, functions::ParseFunctionKind(name));
  } else if (key == "domain") {
    PWTAME_ASSIGN(c.domain, AsString(key, v));
  } else if (key == "labels") {
    std::string name;
    PWTAME_ASSIGN(name, AsString(key, v));
    PWTAME_ASSIGN(c.labels, ParseLabelSource(name));
  } else if (key == "n") {
    PWTAME_ASSIGN(c.n, AsInt(key, v));
  } else if (key == "seed") {
    int64_t seed = 0;
    PWTAME_ASSIGN(seed, AsInt(key, v));
    if (seed < 0) return ValueError(key, v, "a nonnegative integer");
    c.seed = static_cast<uint64_t>(seed);
  } else if (key == "grid_resolution") {
    PWTAME_ASSIGN(c.grid_resolution, AsInt(key, v));
  } else if (key == "cone.r") {
    PWTAME_ASSIGN(c.cone.r, AsDouble(key, v));
  } else if (key == "cone.s") {
    PWTAME_ASSIGN(c.cone.s, AsDouble(key, v));
  } else if (key == "model.formulation") {
    std::string name;
    PWTAME_ASSIGN(name, AsString(key, v));
    PWTAME_ASSIGN(c.fit.formulation, formulation::ParseFormulation(name));
  } else if (key == "model.engine") {
    std::string name;
    PWTAME_ASSIGN(name, AsString(key, v));
    PWTAME_ASSIGN(c.fit.engine, ParseEngine(name));
  } else if (key == "model.loss") {
    std::string name;
    PWTAME_ASSIGN(name, AsString(key, v));
    PWTAME_ASSIGN(c.fit.loss, oracle::ParseLoss(name));
  } else if (key == "model.depth") {
    PWTAME_ASSIGN(h.depth, AsInt(key, v));
  } else if (key == "model.min_leaf_points") {
    PWTAME_ASSIGN(h.min_leaf_points, AsInt(key, v));
  } else if (key == "model.degree") {
    PWTAME_ASSIGN(h.degree, AsInt(key, v));
  } else if (key == "model.mu") {
    PWTAME_ASSIGN(h.mu, AsDouble(key, v));
  } else if (key == "model.big_m") {
    PWTAME_ASSIGN(h.big_m, AsDouble(key, v));
  } else if (key == "model.coeff_bound") {
    PWTAME_ASSIGN(h.coeff_bound, AsDouble(key, v));
  } else if (key == "model.override_guard") {
    PWTAME_ASSIGN(c.fit.override_guard, AsBool(key, v));
  } else if (key == "model.export_mps") {
    PWTAME_ASSIGN(c.fit.export_mps, AsBool(key, v));
  } else if (key == "solver.time_limit") {
    PWTAME_ASSIGN(s.time_limit, AsDouble(key, v));
  } else if (key == "solver.gap_tolerance") {
    PWTAME_ASSIGN(s.gap_tolerance, AsDouble(key, v));
  } else if (key == "solver.node_limit") {
    PWTAME_ASSIGN(s.node_limit, AsInt(key, v));
  } else if (key == "solver.deterministic") {
    PWTAME_ASSIGN(s.deterministic, AsBool(key, v));
  } else if (key == "solver.threads") {
    PWTAME_ASSIGN(s.threads, AsInt(key, v));
  } else if (key == "solver.max_tableau_bytes") {
    int64_t bytes = 0;
    PWTAME_ASSIGN(bytes, AsInt(key, v));
    if (bytes <= 0) return ValueError(key, v, "a positive integer");
    s.max_tableau_bytes = static_cast<size_t>(bytes);
  } else if (key == "denoise.grid_size") {
    PWTAME_ASSIGN(c.denoise.grid_size, AsInt(key, v));
  } else if (key == "denoise.preset") {
    PWTAME_ASSIGN(c.denoise.preset, AsString(key, v));
  } else if (key == "denoise.sigma") {
    PWTAME_ASSIGN(c.denoise.sigma, AsDouble(key, v));
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", v.line, ": unknown key '", key, "'"));
  }
#undef PWTAME_ASSIGN
  return absl::OkStatus();
}

std::string Quote(absl::string_view s) { return absl::StrCat("\"", s, "\""); }

std::string Number(double x) { return absl::StrFormat("%.17g", x); }

}  // namespace

absl::Status ScenarioConfig::Validate() const {
  if (grid_resolution < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid resolution must be at least 2, got ", grid_resolution));
  }
  if (absl::Status st = fit.params.Validate(); !st.ok()) return st;
  if (absl::Status st = fit.solver.Validate(); !st.ok()) return st;
  if (function == FunctionKind::kGrid) {
    absl::StatusOr<std::vector<functions::GridBlock>> blocks =
        functions::PresetBlocks(denoise.preset, denoise.grid_size);
    if (!blocks.ok()) return blocks.status();
    if (!(denoise.sigma >= 0.0)) {
      return absl::InvalidArgumentError("noise sigma must be nonnegative");
    }
    return absl::OkStatus();
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample count must be positive, got ", n));
  }
  absl::StatusOr<functions::Domain> dom = functions::ParseDomain(domain, 2);
  if (!dom.ok()) return dom.status();
  return functions::MakeTestFunction(function, cone).status();
}

std::vector<std::string> ScenarioNames() {
  return {"l1", "linf", "cone", "cone-d3", "denoise"};
}

absl::StatusOr<ScenarioConfig> DefaultScenario(absl::string_view name,
                                               bool paper_scale) {
  ScenarioConfig c;
  c.name = std::string(name);
  formulation::Hyperparams& h = c.fit.params;
  h.depth = 2;
  h.degree = 1;
  h.min_leaf_points = 1;
  h.mu = 1e-4;
  c.fit.solver.time_limit = 600.0;
  c.seed = 1;
  if (name == "l1") {
    c.function = FunctionKind::kL1;
    c.n = 30;
  } else if (name == "linf") {
    c.function = FunctionKind::kLinf;
    c.fit.formulation = formulation::FormulationKind::kHyperplane;
    c.n = 12;
  } else if (name == "cone" || name == "cone-d3") {
    c.function = FunctionKind::kCone;
    c.n = 30;
    c.fit.engine = Engine::kOracle;
    if (name == "cone-d3") {
      h.depth = 3;
      c.fit.override_guard = true;
    }
  } else if (name == "denoise") {
    c.function = FunctionKind::kGrid;
    c.fit.engine = Engine::kOracle;
    c.fit.override_guard = true;
    h.degree = 0;
    c.denoise = DenoiseConfig{8, "quadrants", 0.5};
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown scenario '", name, "' (l1|linf|cone|cone-d3|denoise)"));
  }
  if (paper_scale) {
    c.fit.engine = Engine::kMip;
    c.fit.override_guard = false;
    c.fit.export_mps = true;
    c.n = 250;
    c.fit.solver.time_limit = 300.0;
    if (name == "cone-d3") c.fit.solver.time_limit = 600.0;
    if (name == "denoise") {
      h.depth = 4;
      c.denoise.grid_size = 25;
      c.fit.solver.time_limit = 1200.0;
    }
  }
  return c;
}

absl::StatusOr<ScenarioConfig> ParseScenarioConfig(absl::string_view text,
                                                   ScenarioConfig base) {
  std::string table;
  int line_number = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_number;
    absl::string_view line = absl::StripAsciiWhitespace(StripComment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_number, ": unterminated table header"));
      }
      table = std::string(
          absl::StripAsciiWhitespace(line.substr(1, line.size() - 2)));
      if (table != "cone" && table != "model" && table != "solver" &&
          table != "denoise") {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_number, ": unknown table [", table, "]"));
      }
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected key = value"));
    }
    const std::string key(absl::StripAsciiWhitespace(line.substr(0, eq)));
    absl::string_view value = absl::StripAsciiWhitespace(line.substr(eq + 1));
    Value v;
    v.line = line_number;
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_number, ": unterminated string"));
      }
      v.text = std::string(value.substr(1, value.size() - 2));
      v.quoted = true;
    } else {
      v.text = std::string(value);
    }
    const std::string full = table.empty() ? key : absl::StrCat(table, ".", key);
    if (absl::Status st = Apply(full, v, base); !st.ok()) return st;
  }
  if (absl::Status st = base.Validate(); !st.ok()) return st;
  return base;
}

std::string ScenarioConfigToText(const ScenarioConfig& c) {
  const formulation::Hyperparams& h = c.fit.params;
  const solver::SolverConfig& s = c.fit.solver;
  std::string out;
  absl::StrAppend(&out, "name = ", Quote(c.name), "\n");
  absl::StrAppend(&out, "function = ", Quote(functions::FunctionKindName(c.function)), "\n");
  absl::StrAppend(&out, "domain = ", Quote(c.domain), "\n");
  absl::StrAppend(&out, "labels = ", Quote(LabelSourceName(c.labels)), "\n");
  absl::StrAppend(&out, "n = ", c.n, "\n");
  absl::StrAppend(&out, "seed = ", c.seed, "\n");
  absl::StrAppend(&out, "grid_resolution = ", c.grid_resolution, "\n");
  absl::StrAppend(&out, "\n[cone]\n");
  absl::StrAppend(&out, "r = ", Number(c.cone.r), "\n");
  absl::StrAppend(&out, "s = ", Number(c.cone.s), "\n");
  absl::StrAppend(&out, "\n[model]\n");
  absl::StrAppend(&out, "formulation = ", Quote(formulation::FormulationName(c.fit.formulation)), "\n");
  absl::StrAppend(&out, "engine = ", Quote(EngineName(c.fit.engine)), "\n");
  absl::StrAppend(&out, "loss = ", Quote(oracle::LossName(c.fit.loss)), "\n");
  absl::StrAppend(&out, "depth = ", h.depth, "\n");
  absl::StrAppend(&out, "min_leaf_points = ", h.min_leaf_points, "\n");
  absl::StrAppend(&out, "degree = ", h.degree, "\n");
  absl::StrAppend(&out, "mu = ", Number(h.mu), "\n");
  if (h.big_m) absl::StrAppend(&out, "big_m = ", Number(*h.big_m), "\n");
  if (h.coeff_bound) {
    absl::StrAppend(&out, "coeff_bound = ", Number(*h.coeff_bound), "\n");
  }
  absl::StrAppend(&out, "override_guard = ", c.fit.override_guard ? "true" : "false", "\n");
  absl::StrAppend(&out, "export_mps = ", c.fit.export_mps ? "true" : "false", "\n");
  absl::StrAppend(&out, "\n[solver]\n");
  absl::StrAppend(&out, "time_limit = ", Number(s.time_limit), "\n");
  absl::StrAppend(&out, "gap_tolerance = ", Number(s.gap_tolerance), "\n");
  if (s.node_limit != std::numeric_limits<int64_t>::max()) {
    absl::StrAppend(&out, "node_limit = ", s.node_limit, "\n");
  }
  absl::StrAppend(&out, "deterministic = ", s.deterministic ? "true" : "false", "\n");
  absl::StrAppend(&out, "threads = ", s.threads, "\n");
  absl::StrAppend(&out, "max_tableau_bytes = ", s.max_tableau_bytes, "\n");
  absl::StrAppend(&out, "\n[denoise]\n");
  absl::StrAppend(&out, "grid_size = ", c.denoise.grid_size, "\n");
  absl::StrAppend(&out, "preset = ", Quote(c.denoise.preset), "\n");
  absl::StrAppend(&out, "sigma = ", Number(c.denoise.sigma), "\n");
  return out;
}

}  // namespace pwtame::experiments
