#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freediv::cli {

enum class Check {
  squarefree,
  weights,
  euler,
  theta,
  logder,
  saito,
  koszul,
  rees,
  linear_type,
  isolated_kernel,
  koszul_complex,
  spencer,
  product,
};

/// Every check, in dependency order.
const std::vector<Check>& all_checks();
std::string to_string(Check c);
/// Throws ParseError for an unknown name.
Check check_from_string(std::string_view name);
/// Comma separated names, or "all". Result is deduplicated and in dependency order.
std::vector<Check> parse_checks(std::string_view list);

struct AnalysisRequest {
  std::string name;
  std::vector<std::string> vars;
  std::string f;
  std::optional<std::vector<std::string>> basis;
  std::vector<std::string> operators;
  std::vector<Check> checks;
  std::string order = "degrevlex";
  /// Second factor for the product check, in variables disjoint from `vars`.
  std::optional<std::string> product_f;
  std::vector<std::string> product_vars;
  std::optional<std::vector<long>> weights;
};

/// Flat config text, one `key = value` per line, `#` starts a comment:
///
///   name = "saito cubic"
///   vars = x, y, z                     (or ["x", "y", "z"])
///   f = "x*y*(x+y)"
///   basis = ["y*d_x", "x*d_y"]
///   ops = ["d_x^2"]
///   checks = all                        (or a list / comma string of check names)
///   order = degrevlex | lex
///   product_f = "u*v"
///   product_vars = u, v
///   weights = 2, 3, 4
///
/// Strings may be quoted with "..."; lists use [a, b, ...]. Errors carry line and column.
AnalysisRequest parse_config(std::string_view text);

/// Throws ParseError for missing fields or an unknown order; variable names must be identifiers.
void validate(const AnalysisRequest& req);

}  // namespace freediv::cli
