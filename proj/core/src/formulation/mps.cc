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

#include "pwtame/formulation/mps.h"

#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace pwtame::formulation {

namespace {

constexpr absl::string_view kObjectiveRow = "OBJ";
constexpr absl::string_view kBoundSet = "BND";
constexpr absl::string_view kRhsSet = "RHS";

std::string ShortestDouble(double v) {
  if (v == 0.0) return "0";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, end);
}

absl::StatusOr<double> ParseDouble(absl::string_view token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse number '", token, "'"));
  }
  return v;
}

std::string ColumnName(int j) { return absl::StrFormat("C%07d", j + 1); }
std::string RowName(int i) { return absl::StrFormat("R%07d", i + 1); }

// Fixed-format data line: fields start at columns 2, 5, 15, 25, 40, 50.
std::string DataLine(absl::string_view f1, absl::string_view f2,
                     absl::string_view f3 = {}, absl::string_view f4 = {},
                     absl::string_view f5 = {}, absl::string_view f6 = {}) {
  std::string line = absl::StrFormat(" %-2s %-8s  %-8s  %-12s   %-8s  %s", f1,
                                     f2, f3, f4, f5, f6);
  absl::StripTrailingAsciiWhitespace(&line);
  return line;
}

}  // namespace

MpsFiles ExportMps(const MipModel& model, absl::string_view model_name) {
  MpsFiles files;
  std::string& out = files.mps;
  absl::StrAppend(&out, "NAME          ", model_name, "\n");
  out += "ROWS\n";
  out += DataLine("N", kObjectiveRow) + "\n";
  for (int i = 0; i < model.num_constraints(); ++i) {
    const char* sense = "E";
    switch (model.constraint(i).sense) {
      case Sense::kLessEqual:
        sense = "L";
        break;
      case Sense::kGreaterEqual:
        sense = "G";
        break;
      case Sense::kEqual:
        sense = "E";
        break;
    }
    out += DataLine(sense, RowName(i)) + "\n";
  }

  // Column-major view of the constraint matrix.
  std::vector<std::vector<std::pair<int, double>>> columns(
      model.num_variables());
  for (int i = 0; i < model.num_constraints(); ++i) {
    for (const Term& t : model.constraint(i).terms) {
      columns[t.var].push_back({i, t.coeff});
    }
  }

  out += "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (int j = 0; j < model.num_variables(); ++j) {
    const bool binary = model.variable(j).type == VarType::kBinary;
    if (binary != in_integer_block) {
      out += DataLine("", absl::StrFormat("M%07d", ++marker), "'MARKER'", "",
                      binary ? "'INTORG'" : "'INTEND'") +
             "\n";
      in_integer_block = binary;
    }
    std::vector<std::pair<std::string, std::string>> entries;
    if (model.objective()[j] != 0.0 || columns[j].empty()) {
      entries.push_back(
          {std::string(kObjectiveRow), ShortestDouble(model.objective()[j])});
    }
    for (const auto& [row, coeff] : columns[j]) {
      entries.push_back({RowName(row), ShortestDouble(coeff)});
    }
    const std::string name = ColumnName(j);
    for (size_t k = 0; k < entries.size(); k += 2) {
      if (k + 1 < entries.size()) {
        out += DataLine("", name, entries[k].first, entries[k].second,
                        entries[k + 1].first, entries[k + 1].second) +
               "\n";
      } else {
        out += DataLine("", name, entries[k].first, entries[k].second) + "\n";
      }
    }
  }
  if (in_integer_block) {
    out += DataLine("", absl::StrFormat("M%07d", ++marker), "'MARKER'", "",
                    "'INTEND'") +
           "\n";
  }

  out += "RHS\n";
  std::vector<std::pair<std::string, std::string>> rhs;
  for (int i = 0; i < model.num_constraints(); ++i) {
    if (model.constraint(i).rhs != 0.0) {
      rhs.push_back({RowName(i), ShortestDouble(model.constraint(i).rhs)});
    }
  }
  for (size_t k = 0; k < rhs.size(); k += 2) {
    if (k + 1 < rhs.size()) {
      out += DataLine("", kRhsSet, rhs[k].first, rhs[k].second,
                      rhs[k + 1].first, rhs[k + 1].second) +
             "\n";
    } else {
      out += DataLine("", kRhsSet, rhs[k].first, rhs[k].second) + "\n";
    }
  }
  out += "RANGES\n";

  out += "BOUNDS\n";
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    const std::string name = ColumnName(j);
    if (v.type == VarType::kBinary) {
      if (v.lower != 0.0) {
        out += DataLine("LO", kBoundSet, name, ShortestDouble(v.lower)) + "\n";
      }
      out += DataLine("UP", kBoundSet, name, ShortestDouble(v.upper)) + "\n";
      continue;
    }
    const bool lower_inf = v.lower == -kInfinity;
    const bool upper_inf = v.upper == kInfinity;
    if (lower_inf && upper_inf) {
      out += DataLine("FR", kBoundSet, name) + "\n";
    } else if (!lower_inf && !upper_inf && v.lower == v.upper) {
      out += DataLine("FX", kBoundSet, name, ShortestDouble(v.lower)) + "\n";
    } else {
      if (lower_inf) {
        out += DataLine("MI", kBoundSet, name) + "\n";
      } else if (v.lower != 0.0) {
        out += DataLine("LO", kBoundSet, name, ShortestDouble(v.lower)) + "\n";
      }
      if (!upper_inf) {
        out += DataLine("UP", kBoundSet, name, ShortestDouble(v.upper)) + "\n";
      }
    }
  }
  out += "ENDATA\n";

  files.name_table = "mps_name,paper_symbol\n";
  absl::StrAppend(&files.name_table, kObjectiveRow, ",objective\n");
  for (int j = 0; j < model.num_variables(); ++j) {
    absl::StrAppend(&files.name_table, ColumnName(j), ",",
                    model.variable(j).name, "\n");
  }
  for (int i = 0; i < model.num_constraints(); ++i) {
    absl::StrAppend(&files.name_table, RowName(i), ",",
                    model.constraint(i).name, "\n");
  }
  return files;
}

absl::StatusOr<absl::flat_hash_map<std::string, std::string>> ParseNameTable(
    absl::string_view name_table) {
  absl::flat_hash_map<std::string, std::string> table;
  bool header = true;
  for (absl::string_view line :
       absl::StrSplit(name_table, '\n', absl::SkipWhitespace())) {
    line = absl::StripAsciiWhitespace(line);
    if (header) {
      header = false;
      if (line == "mps_name,paper_symbol") continue;
    }
    std::vector<absl::string_view> fields = absl::StrSplit(line, ',');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad name table line '", line, "'"));
    }
    table[std::string(fields[0])] = std::string(fields[1]);
  }
  return table;
}

absl::StatusOr<MipModel> ImportMps(absl::string_view mps,
                                   absl::string_view name_table) {
  absl::flat_hash_map<std::string, std::string> names;
  if (!name_table.empty()) {
    absl::StatusOr<absl::flat_hash_map<std::string, std::string>> parsed =
        ParseNameTable(name_table);
    if (!parsed.ok()) return parsed.status();
    names = *std::move(parsed);
  }
  auto translate = [&](const std::string& raw) {
    auto it = names.find(raw);
    return it == names.end() ? raw : it->second;
  };

  struct RowInfo {
    std::string name;
    Sense sense = Sense::kEqual;
    double rhs = 0.0;
    std::vector<Term> terms;
    bool has_range = false;
    double range = 0.0;
  };
  struct ColumnInfo {
    std::string name;
    bool integer = false;
    double lower = 0.0;
    double upper = kInfinity;
    bool upper_set = false;
    double cost = 0.0;
  };
  std::string objective_name;
  std::vector<RowInfo> rows;
  absl::flat_hash_map<std::string, int> row_index;
  std::vector<ColumnInfo> columns;
  absl::flat_hash_map<std::string, int> column_index;
  bool integer_block = false;
  bool maximize = false;

  enum class Section { kNone, kName, kRows, kColumns, kRhs, kRanges, kBounds,
                       kObjSense, kEnd };
  Section section = Section::kNone;
  int line_number = 0;
  auto error = [&](absl::string_view what) {
    return absl::InvalidArgumentError(
        absl::StrCat("MPS line ", line_number, ": ", what));
  };

  for (absl::string_view raw_line : absl::StrSplit(mps, '\n')) {
    ++line_number;
    std::string line(raw_line);
    absl::StripTrailingAsciiWhitespace(&line);
    if (line.empty() || line[0] == '*') continue;
    std::vector<std::string> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (!absl::ascii_isspace(static_cast<unsigned char>(line[0]))) {
      const std::string& head = tokens[0];
      if (head == "NAME") {
        section = Section::kName;
      } else if (head == "ROWS") {
        section = Section::kRows;
      } else if (head == "COLUMNS") {
        section = Section::kColumns;
      } else if (head == "RHS") {
        section = Section::kRhs;
      } else if (head == "RANGES") {
        section = Section::kRanges;
      } else if (head == "BOUNDS") {
        section = Section::kBounds;
      } else if (head == "OBJSENSE") {
        section = Section::kObjSense;
        if (tokens.size() > 1) maximize = tokens[1] == "MAX" || tokens[1] == "MAXIMIZE";
      } else if (head == "ENDATA") {
        section = Section::kEnd;
        break;
      } else {
        return error(absl::StrCat("unknown section '", head, "'"));
      }
      continue;
    }
    switch (section) {
      case Section::kObjSense:
        maximize = tokens[0] == "MAX" || tokens[0] == "MAXIMIZE";
        break;
      case Section::kRows: {
        if (tokens.size() != 2) return error("ROWS entries need type and name");
        const std::string& type = tokens[0];
        if (type == "N") {
          if (objective_name.empty()) objective_name = tokens[1];
          continue;
        }
        Sense sense;
        if (type == "L") {
          sense = Sense::kLessEqual;
        } else if (type == "G") {
          sense = Sense::kGreaterEqual;
        } else if (type == "E") {
          sense = Sense::kEqual;
        } else {
          return error(absl::StrCat("unknown row type '", type, "'"));
        }
        row_index[tokens[1]] = static_cast<int>(rows.size());
        RowInfo info;
        info.name = tokens[1];
        info.sense = sense;
        rows.push_back(std::move(info));
        break;
      }
      case Section::kColumns: {
        if (tokens.size() >= 3 && tokens[1] == "'MARKER'") {
          if (tokens.back() == "'INTORG'") {
            integer_block = true;
          } else if (tokens.back() == "'INTEND'") {
            integer_block = false;
          } else {
            return error("unknown marker");
          }
          continue;
        }
        if (tokens.size() != 3 && tokens.size() != 5) {
          return error("COLUMNS entries need 3 or 5 fields");
        }
        auto [it, inserted] =
            column_index.emplace(tokens[0], static_cast<int>(columns.size()));
        if (inserted) {
          columns.push_back(ColumnInfo{tokens[0], integer_block});
        }
        const int j = it->second;
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          absl::StatusOr<double> value = ParseDouble(tokens[k + 1]);
          if (!value.ok()) return error(value.status().message());
          if (tokens[k] == objective_name) {
            columns[j].cost = *value;
            continue;
          }
          auto row = row_index.find(tokens[k]);
          if (row == row_index.end()) {
            return error(absl::StrCat("unknown row '", tokens[k], "'"));
          }
          if (*value != 0.0) rows[row->second].terms.push_back({j, *value});
        }
        break;
      }
      case Section::kRhs:
      case Section::kRanges: {
        const size_t first = tokens.size() % 2 == 1 ? 1 : 0;
        for (size_t k = first; k + 1 < tokens.size(); k += 2) {
          absl::StatusOr<double> value = ParseDouble(tokens[k + 1]);
          if (!value.ok()) return error(value.status().message());
          if (tokens[k] == objective_name) {
            if (*value != 0.0) return error("objective constants are not supported");
            continue;
          }
          auto row = row_index.find(tokens[k]);
          if (row == row_index.end()) {
            return error(absl::StrCat("unknown row '", tokens[k], "'"));
          }
          if (section == Section::kRhs) {
            rows[row->second].rhs = *value;
          } else {
            rows[row->second].has_range = true;
            rows[row->second].range = *value;
          }
        }
        break;
      }
      case Section::kBounds: {
        const std::string& type = tokens[0];
        const bool valueless =
            type == "FR" || type == "MI" || type == "PL" ||
            (type == "BV" && (tokens.size() == 2 || tokens.size() == 3));
        size_t name_at;
        if (valueless) {
          name_at = tokens.size() == 3 ? 2 : 1;
        } else {
          if (tokens.size() != 3 && tokens.size() != 4) {
            return error("BOUNDS entries need 3 or 4 fields");
          }
          name_at = tokens.size() == 4 ? 2 : 1;
        }
        if (name_at >= tokens.size()) return error("BOUNDS entry misses a column");
        auto col = column_index.find(tokens[name_at]);
        if (col == column_index.end()) {
          return error(absl::StrCat("unknown column '", tokens[name_at], "'"));
        }
        ColumnInfo& info = columns[col->second];
        double value = 0.0;
        if (!valueless) {
          absl::StatusOr<double> parsed = ParseDouble(tokens[name_at + 1]);
          if (!parsed.ok()) return error(parsed.status().message());
          value = *parsed;
        }
        if (type == "UP" || type == "UI") {
          info.upper = value;
          info.upper_set = true;
          if (value < 0.0 && info.lower == 0.0) info.lower = -kInfinity;
        } else if (type == "LO" || type == "LI") {
          info.lower = value;
        } else if (type == "FX") {
          info.lower = info.upper = value;
          info.upper_set = true;
        } else if (type == "FR") {
          info.lower = -kInfinity;
          info.upper = kInfinity;
          info.upper_set = true;
        } else if (type == "MI") {
          info.lower = -kInfinity;
        } else if (type == "PL") {
          info.upper = kInfinity;
          info.upper_set = true;
        } else if (type == "BV") {
          info.integer = true;
          info.lower = 0.0;
          info.upper = 1.0;
          info.upper_set = true;
        } else {
          return error(absl::StrCat("unknown bound type '", type, "'"));
        }
        break;
      }
      case Section::kName:
      case Section::kNone:
      case Section::kEnd:
        return error("data line outside a section");
    }
  }
  if (section != Section::kEnd) {
    return absl::InvalidArgumentError("MPS file lacks ENDATA");
  }

  MipModel model;
  for (const ColumnInfo& col : columns) {
    double upper = col.upper;
    // Integer markers without an explicit upper bound denote binaries.
    if (col.integer && !col.upper_set) upper = 1.0;
    if (col.integer && (col.lower < 0.0 || upper > 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "integer column ", col.name, " is not binary; only binaries are supported"));
    }
    const int j = model.AddVariable(translate(col.name), col.lower, upper,
                                    col.integer ? VarType::kBinary
                                                : VarType::kContinuous);
    model.SetObjective(j, maximize ? -col.cost : col.cost);
  }
  for (RowInfo& row : rows) {
    const std::string name = translate(row.name);
    if (!row.has_range) {
      model.AddConstraint(name, std::move(row.terms), row.sense, row.rhs);
      continue;
    }
    // A ranged row becomes a pair of one-sided rows.
    double lo = row.rhs, hi = row.rhs;
    const double r = std::abs(row.range);
    switch (row.sense) {
      case Sense::kLessEqual:
        lo = row.rhs - r;
        break;
      case Sense::kGreaterEqual:
        hi = row.rhs + r;
        break;
      case Sense::kEqual:
        (row.range >= 0.0 ? hi : lo) = row.rhs + row.range;
        break;
    }
    model.AddConstraint(name, row.terms, Sense::kGreaterEqual, lo);
    model.AddConstraint(absl::StrCat(name, "_range"), std::move(row.terms),
                        Sense::kLessEqual, hi);
  }
  return model;
}

}  // namespace pwtame::formulation
