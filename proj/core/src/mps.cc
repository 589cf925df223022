// Copyright 2026 The pdhg-lp Authors
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

#include "pdhg/mps.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

#include "Eigen/Core"
#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "pdhg/lp.h"
#include "pdhg/sparse_matrix.h"

namespace pdhg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Section {
  kNone,
  kName,
  kObjSense,
  kRows,
  kColumns,
  kRhs,
  kBounds,
  kEnd,
};

enum class RowType { kObjective, kIgnoredObjective, kLessEqual, kGreaterEqual,
                     kEqual };

struct RowInfo {
  RowType type;
  std::string name;
  double rhs = 0.0;
};

struct ColumnInfo {
  std::string name;
  double cost = 0.0;
  double lower = 0.0;
  double upper = kInf;
  bool lower_set = false;
  // row index → coefficient (summed over duplicates).
  std::map<int, double> entries;
};

class MpsParser {
 public:
  absl::StatusOr<MpsModel> Parse(absl::string_view text);

 private:
  absl::Status Error(absl::string_view message) const {
    return absl::InvalidArgumentError(
        absl::StrCat("MPS line ", line_number_, ": ", message));
  }
  absl::StatusOr<double> Number(absl::string_view token) const;
  absl::Status ParseHeader(const std::vector<absl::string_view>& tokens);
  absl::Status ParseRow(const std::vector<absl::string_view>& tokens);
  absl::Status ParseColumn(const std::vector<absl::string_view>& tokens);
  absl::Status ParseRhs(const std::vector<absl::string_view>& tokens);
  absl::Status ParseBound(const std::vector<absl::string_view>& tokens);
  absl::Status ParseObjSense(absl::string_view token);
  absl::StatusOr<MpsModel> Build();

  int line_number_ = 0;
  Section section_ = Section::kNone;
  bool maximize_ = false;
  bool seen_objective_ = false;
  double objective_rhs_ = 0.0;
  std::string name_;
  std::vector<RowInfo> rows_;
  absl::flat_hash_map<std::string, int> row_index_;
  std::vector<ColumnInfo> columns_;
  absl::flat_hash_map<std::string, int> column_index_;
  std::vector<std::string> warnings_;
};

absl::StatusOr<double> MpsParser::Number(absl::string_view token) const {
  double value;
  if (!absl::SimpleAtod(token, &value) || !std::isfinite(value)) {
    return Error(absl::StrCat("malformed number '", token, "'"));
  }
  return value;
}

absl::Status MpsParser::ParseObjSense(absl::string_view token) {
  const std::string upper = absl::AsciiStrToUpper(token);
  if (upper == "MAX" || upper == "MAXIMIZE") {
    maximize_ = true;
  } else if (upper == "MIN" || upper == "MINIMIZE") {
    maximize_ = false;
  } else {
    return Error(absl::StrCat("unknown objective sense '", token, "'"));
  }
  return absl::OkStatus();
}

absl::Status MpsParser::ParseHeader(
    const std::vector<absl::string_view>& tokens) {
  const std::string keyword = absl::AsciiStrToUpper(tokens[0]);
  if (keyword == "NAME") {
    section_ = Section::kName;
    if (tokens.size() > 1) name_ = std::string(tokens[1]);
  } else if (keyword == "OBJSENSE") {
    section_ = Section::kObjSense;
    if (tokens.size() > 1) return ParseObjSense(tokens[1]);
  } else if (keyword == "ROWS") {
    section_ = Section::kRows;
  } else if (keyword == "COLUMNS") {
    section_ = Section::kColumns;
  } else if (keyword == "RHS") {
    section_ = Section::kRhs;
  } else if (keyword == "BOUNDS") {
    section_ = Section::kBounds;
  } else if (keyword == "RANGES") {
    return Error("RANGES section is not supported");
  } else if (keyword == "ENDATA") {
    section_ = Section::kEnd;
  } else {
    return Error(absl::StrCat("unknown section '", tokens[0], "'"));
  }
  return absl::OkStatus();
}

absl::Status MpsParser::ParseRow(const std::vector<absl::string_view>& tokens) {
  if (tokens.size() != 2) return Error("ROWS entry needs a type and a name");
  const std::string type = absl::AsciiStrToUpper(tokens[0]);
  const std::string name(tokens[1]);
  if (row_index_.contains(name)) {
    return Error(absl::StrCat("duplicate row name '", name, "'"));
  }
  RowInfo row{RowType::kEqual, name};
  if (type == "N") {
    if (seen_objective_) {
      row.type = RowType::kIgnoredObjective;
      warnings_.push_back(absl::StrCat("line ", line_number_,
                                       ": extra objective row '", name,
                                       "' ignored"));
    } else {
      row.type = RowType::kObjective;
      seen_objective_ = true;
    }
  } else if (type == "L") {
    row.type = RowType::kLessEqual;
  } else if (type == "G") {
    row.type = RowType::kGreaterEqual;
  } else if (type == "E") {
    row.type = RowType::kEqual;
  } else {
    return Error(absl::StrCat("unknown row type '", tokens[0], "'"));
  }
  row_index_[name] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return absl::OkStatus();
}

absl::Status MpsParser::ParseColumn(
    const std::vector<absl::string_view>& tokens) {
  for (absl::string_view t : tokens) {
    if (absl::AsciiStrToUpper(t).find("MARKER") != std::string::npos) {
      warnings_.push_back(absl::StrCat(
          "line ", line_number_,
          ": integer marker ignored, solving the LP relaxation"));
      return absl::OkStatus();
    }
  }
  if (tokens.size() != 3 && tokens.size() != 5) {
    return Error("COLUMNS entry needs a column name and one or two "
                 "(row, value) pairs");
  }
  const std::string col_name(tokens[0]);
  auto [it, inserted] =
      column_index_.try_emplace(col_name, static_cast<int>(columns_.size()));
  if (inserted) {
    ColumnInfo info;
    info.name = col_name;
    columns_.push_back(std::move(info));
  }
  ColumnInfo& column = columns_[it->second];
  for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
    const std::string row_name(tokens[k]);
    auto row_it = row_index_.find(row_name);
    if (row_it == row_index_.end()) {
      return Error(absl::StrCat("unknown row '", row_name, "'"));
    }
    absl::StatusOr<double> value = Number(tokens[k + 1]);
    if (!value.ok()) return value.status();
    const RowInfo& row = rows_[row_it->second];
    if (row.type == RowType::kObjective) {
      column.cost += *value;
    } else if (row.type != RowType::kIgnoredObjective) {
      column.entries[row_it->second] += *value;
    }
  }
  return absl::OkStatus();
}

absl::Status MpsParser::ParseRhs(const std::vector<absl::string_view>& tokens) {
  // Optional leading set name: an odd token count carries one.
  size_t start = tokens.size() % 2 == 1 ? 1 : 0;
  if (tokens.size() < 2 || tokens.size() > 5) {
    return Error("RHS entry needs one or two (row, value) pairs");
  }
  for (size_t k = start; k + 1 < tokens.size(); k += 2) {
    const std::string row_name(tokens[k]);
    auto row_it = row_index_.find(row_name);
    if (row_it == row_index_.end()) {
      return Error(absl::StrCat("unknown row '", row_name, "' in RHS"));
    }
    absl::StatusOr<double> value = Number(tokens[k + 1]);
    if (!value.ok()) return value.status();
    RowInfo& row = rows_[row_it->second];
    if (row.type == RowType::kObjective) {
      objective_rhs_ = *value;
    } else if (row.type != RowType::kIgnoredObjective) {
      row.rhs = *value;
    }
  }
  return absl::OkStatus();
}

absl::Status MpsParser::ParseBound(
    const std::vector<absl::string_view>& tokens) {
  if (tokens.size() < 2) return Error("BOUNDS entry is too short");
  std::string type = absl::AsciiStrToUpper(tokens[0]);
  if (type == "BV" || type == "SC") {
    return Error(absl::StrCat("bound type ", type, " is not supported"));
  }
  if (type == "LI" || type == "UI") {
    warnings_.push_back(absl::StrCat("line ", line_number_, ": integer bound ",
                                     type, " treated as continuous"));
    type = type == "LI" ? "LO" : "UP";
  }
  const bool needs_value =
      type == "LO" || type == "UP" || type == "FX";
  const bool no_value = type == "FR" || type == "MI" || type == "PL";
  if (!needs_value && !no_value) {
    return Error(absl::StrCat("unknown bound type '", tokens[0], "'"));
  }
  absl::string_view col_token;
  std::optional<double> value;
  if (needs_value) {
    if (tokens.size() != 3 && tokens.size() != 4) {
      return Error("bound entry needs a column and a value");
    }
    col_token = tokens[tokens.size() - 2];
    absl::StatusOr<double> v = Number(tokens.back());
    if (!v.ok()) return v.status();
    value = *v;
  } else {
    if (tokens.size() != 2 && tokens.size() != 3) {
      return Error("bound entry has too many fields");
    }
    col_token = tokens.back();
  }
  auto col_it = column_index_.find(std::string(col_token));
  if (col_it == column_index_.end()) {
    return Error(absl::StrCat("unknown column '", col_token, "' in BOUNDS"));
  }
  ColumnInfo& column = columns_[col_it->second];
  if (type == "LO") {
    column.lower = *value;
    column.lower_set = true;
  } else if (type == "UP") {
    column.upper = *value;
    if (*value < 0.0 && !column.lower_set && column.lower == 0.0) {
      column.lower = -kInf;
      warnings_.push_back(absl::StrCat(
          "line ", line_number_, ": negative upper bound on '",
          column.name, "' with default lower bound; lower bound set to -inf"));
    }
  } else if (type == "FX") {
    column.lower = *value;
    column.upper = *value;
    column.lower_set = true;
  } else if (type == "FR") {
    column.lower = -kInf;
    column.upper = kInf;
    column.lower_set = true;
  } else if (type == "MI") {
    column.lower = -kInf;
    column.lower_set = true;
  } else {
    column.upper = kInf;
  }
  return absl::OkStatus();
}

absl::StatusOr<MpsModel> MpsParser::Parse(absl::string_view text) {
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_number_;
    absl::string_view line = absl::StripTrailingAsciiWhitespace(raw);
    if (line.empty() || line.front() == '*') continue;
    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (tokens.empty()) continue;
    if (section_ == Section::kEnd) {
      return Error("content after ENDATA");
    }
    const bool indented = line.front() == ' ' || line.front() == '\t';
    if (!indented) {
      if (absl::Status s = ParseHeader(tokens); !s.ok()) return s;
      continue;
    }
    absl::Status status;
    switch (section_) {
      case Section::kNone:
        status = Error("data before the first section");
        break;
      case Section::kName:
        status = Error("unexpected data in NAME section");
        break;
      case Section::kObjSense:
        status = ParseObjSense(tokens[0]);
        break;
      case Section::kRows:
        status = ParseRow(tokens);
        break;
      case Section::kColumns:
        status = ParseColumn(tokens);
        break;
      case Section::kRhs:
        status = ParseRhs(tokens);
        break;
      case Section::kBounds:
        status = ParseBound(tokens);
        break;
      case Section::kEnd:
        break;
    }
    if (!status.ok()) return status;
  }
  if (section_ != Section::kEnd) {
    return absl::InvalidArgumentError("MPS: missing ENDATA");
  }
  if (!seen_objective_) {
    warnings_.push_back("no objective row; objective is zero");
  }
  return Build();
}

absl::StatusOr<MpsModel> MpsParser::Build() {
  MpsModel model;
  model.names.problem = name_;
  model.warnings = warnings_;
  std::vector<int> row_slot(rows_.size(), -1);
  std::vector<bool> row_is_eq(rows_.size(), false);
  int num_eq = 0;
  int num_ineq = 0;
  for (size_t r = 0; r < rows_.size(); ++r) {
    switch (rows_[r].type) {
      case RowType::kObjective:
        model.names.objective = rows_[r].name;
        break;
      case RowType::kIgnoredObjective:
        break;
      case RowType::kEqual:
        row_slot[r] = num_eq++;
        row_is_eq[r] = true;
        model.names.eq_rows.push_back(rows_[r].name);
        break;
      case RowType::kLessEqual:
      case RowType::kGreaterEqual:
        row_slot[r] = num_ineq++;
        model.names.ineq_rows.push_back(rows_[r].name);
        break;
    }
  }
  std::vector<double> b_eq(num_eq), b_ineq(num_ineq);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (row_slot[r] < 0) continue;
    const double sign = rows_[r].type == RowType::kGreaterEqual ? -1.0 : 1.0;
    (row_is_eq[r] ? b_eq : b_ineq)[row_slot[r]] = sign * rows_[r].rhs;
  }

  const double objective_sign = maximize_ ? -1.0 : 1.0;
  double offset = -objective_rhs_ * objective_sign;
  std::vector<Triplet> eq_triplets, ineq_triplets;
  std::vector<double> costs;
  // Upper-bound rows, added after all ROWS-section inequalities:
  // (list of (column, coefficient), rhs, name).
  struct BoundRow {
    std::vector<std::pair<int, double>> terms;
    double rhs;
    std::string name;
  };
  std::vector<BoundRow> bound_rows;

  auto add_column = [&](const ColumnInfo& column, double sign,
                        std::string name) {
    const int j = static_cast<int>(costs.size());
    costs.push_back(objective_sign * sign * column.cost);
    model.names.variables.push_back(std::move(name));
    for (const auto& [r, value] : column.entries) {
      const double row_sign =
          rows_[r].type == RowType::kGreaterEqual ? -1.0 : 1.0;
      const Triplet t{row_slot[r], j, sign * row_sign * value};
      (row_is_eq[r] ? eq_triplets : ineq_triplets).push_back(t);
    }
    return j;
  };

  for (const ColumnInfo& column : columns_) {
    if (column.lower > column.upper) {
      return absl::InvalidArgumentError(absl::StrCat(
          "MPS: column '", column.name, "' has lower bound ", column.lower,
          " above upper bound ", column.upper));
    }
    if (std::isfinite(column.lower)) {
      const int j = add_column(column, 1.0, column.name);
      if (column.lower != 0.0) {
        // x = l + x': move l·A_j to the right-hand side.
        for (const auto& [r, value] : column.entries) {
          const double row_sign =
              rows_[r].type == RowType::kGreaterEqual ? -1.0 : 1.0;
          (row_is_eq[r] ? b_eq : b_ineq)[row_slot[r]] -=
              row_sign * value * column.lower;
        }
        offset += objective_sign * column.cost * column.lower;
      }
      if (std::isfinite(column.upper)) {
        bound_rows.push_back({{{j, 1.0}},
                              column.upper - column.lower,
                              absl::StrCat("UB_", column.name)});
      }
    } else {
      const int pos = add_column(column, 1.0, absl::StrCat(column.name, "_pos"));
      const int neg =
          add_column(column, -1.0, absl::StrCat(column.name, "_neg"));
      if (std::isfinite(column.upper)) {
        bound_rows.push_back({{{pos, 1.0}, {neg, -1.0}},
                              column.upper,
                              absl::StrCat("UB_", column.name)});
      }
    }
  }
  for (const BoundRow& row : bound_rows) {
    const int slot = num_ineq++;
    for (const auto& [j, v] : row.terms) ineq_triplets.push_back({slot, j, v});
    b_ineq.push_back(row.rhs);
    model.names.ineq_rows.push_back(row.name);
  }

  const int n = static_cast<int>(costs.size());
  GeneralLp& lp = model.lp;
  absl::StatusOr<SparseMatrix> a_eq =
      SparseMatrix::FromTriplets(num_eq, n, std::move(eq_triplets));
  if (!a_eq.ok()) return a_eq.status();
  absl::StatusOr<SparseMatrix> a_ineq =
      SparseMatrix::FromTriplets(num_ineq, n, std::move(ineq_triplets));
  if (!a_ineq.ok()) return a_ineq.status();
  lp.a_eq = *std::move(a_eq);
  lp.a_ineq = *std::move(a_ineq);
  lp.b_eq = Eigen::Map<const Eigen::VectorXd>(b_eq.data(), num_eq);
  lp.b_ineq = Eigen::Map<const Eigen::VectorXd>(b_ineq.data(), num_ineq);
  lp.c = Eigen::Map<const Eigen::VectorXd>(costs.data(), n);
  lp.objective_offset = offset;
  return model;
}

std::string FormatNumber(double v) { return absl::StrFormat("%.17g", v); }

}  // namespace

absl::StatusOr<MpsModel> ParseMps(std::string_view text) {
  MpsParser parser;
  return parser.Parse(absl::string_view(text.data(), text.size()));
}

absl::StatusOr<MpsModel> ReadMpsFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path));
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseMps(buffer.str());
}

std::string WriteMps(const GeneralLp& lp, const MpsNames* names) {
  const int n = lp.num_vars();
  auto name_or = [](const std::vector<std::string>* list, int i,
                    absl::string_view prefix) {
    if (list != nullptr && i < static_cast<int>(list->size())) {
      return (*list)[i];
    }
    return absl::StrCat(prefix, i);
  };
  const std::vector<std::string>* var_names =
      names != nullptr ? &names->variables : nullptr;
  const std::vector<std::string>* eq_names =
      names != nullptr ? &names->eq_rows : nullptr;
  const std::vector<std::string>* ineq_names =
      names != nullptr ? &names->ineq_rows : nullptr;
  const std::string objective = names != nullptr ? names->objective : "obj";

  std::string out;
  absl::StrAppend(&out, "NAME ",
                  names != nullptr && !names->problem.empty() ? names->problem
                                                              : "LP",
                  "\nROWS\n N ", objective, "\n");
  for (int i = 0; i < lp.num_eq(); ++i) {
    absl::StrAppend(&out, " E ", name_or(eq_names, i, "E"), "\n");
  }
  for (int i = 0; i < lp.num_ineq(); ++i) {
    absl::StrAppend(&out, " L ", name_or(ineq_names, i, "L"), "\n");
  }
  absl::StrAppend(&out, "COLUMNS\n");
  const SparseMatrix eq_t = lp.a_eq.Transposed();
  const SparseMatrix ineq_t = lp.a_ineq.Transposed();
  for (int j = 0; j < n; ++j) {
    const std::string col = name_or(var_names, j, "C");
    const bool empty =
        eq_t.RowIndices(j).empty() && ineq_t.RowIndices(j).empty();
    if (lp.c[j] != 0.0 || empty) {
      absl::StrAppend(&out, "    ", col, " ", objective, " ",
                      FormatNumber(lp.c[j]), "\n");
    }
    for (size_t k = 0; k < eq_t.RowIndices(j).size(); ++k) {
      absl::StrAppend(&out, "    ", col, " ",
                      name_or(eq_names, eq_t.RowIndices(j)[k], "E"), " ",
                      FormatNumber(eq_t.RowValues(j)[k]), "\n");
    }
    for (size_t k = 0; k < ineq_t.RowIndices(j).size(); ++k) {
      absl::StrAppend(&out, "    ", col, " ",
                      name_or(ineq_names, ineq_t.RowIndices(j)[k], "L"), " ",
                      FormatNumber(ineq_t.RowValues(j)[k]), "\n");
    }
  }
  absl::StrAppend(&out, "RHS\n");
  if (lp.objective_offset != 0.0) {
    absl::StrAppend(&out, "    RHS ", objective, " ",
                    FormatNumber(-lp.objective_offset), "\n");
  }
  for (int i = 0; i < lp.num_eq(); ++i) {
    if (lp.b_eq[i] != 0.0) {
      absl::StrAppend(&out, "    RHS ", name_or(eq_names, i, "E"), " ",
                      FormatNumber(lp.b_eq[i]), "\n");
    }
  }
  for (int i = 0; i < lp.num_ineq(); ++i) {
    if (lp.b_ineq[i] != 0.0) {
      absl::StrAppend(&out, "    RHS ", name_or(ineq_names, i, "L"), " ",
                      FormatNumber(lp.b_ineq[i]), "\n");
    }
  }
  absl::StrAppend(&out, "ENDATA\n");
  return out;
}

}  // namespace pdhg
