#pragma once

#include <string>
#include <vector>

#include "amtv/constants.hpp"
#include "amtv/level4.hpp"

namespace amtv {

// lhs = rhs. Rows sharing a nonempty group are alternatives: the group holds
// when at least one member does.
struct CatalogRow {
  std::string anchor;
  ConstExpr lhs;
  ConstExpr rhs;
  std::string group;
  // Tolerance exponent override (0: suite default).
  int tol_exp = 0;
};

struct SuiteSpec {
  std::string name;
  int digits;
  int tol_exp;  // pass when |lhs - rhs| < 10^-tol_exp
};

const std::vector<SuiteSpec>& catalog_suites();
const SuiteSpec& suite_spec(const std::string& name);

std::vector<CatalogRow> catalog_rows(const std::string& suite);

struct RowResult {
  std::string anchor;
  std::string lhs;
  std::string rhs;
  std::string group;
  hp::Real residual;
  int tol_exp = 0;
  bool pass = false;
};

struct CatalogReport {
  std::string suite;
  int digits = 0;
  int tol_exp = 0;
  std::vector<RowResult> rows;
  // group name -> anchors of passing members
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  hp::Real max_residual;
  bool all_pass = false;
  std::vector<std::string> failures;
};

CatalogReport verify_catalog(const std::string& suite, const EvalOptions& opts = {}, int digits_override = 0);

// Named basis symbols used by the weight-4 (a1..a7) and weight-5 (b1..b13) tables.
const std::vector<std::pair<std::string, std::string>>& table_symbols();
// Parses an expression allowing table symbols and implicit "2b6" products.
ConstExpr parse_table_expr(const std::string& text);

struct TableRow {
  std::string lhs;  // signed index
  std::string rhs;  // expression over a_j / b_j
};
// Displayed reductions of the weight-4 and weight-5 tables (weight 4 or 5).
const std::vector<TableRow>& reduction_table(int weight);
// Index notations of a1..a7 or b1..b13.
std::vector<std::string> table_basis(int weight);

}  // namespace amtv
