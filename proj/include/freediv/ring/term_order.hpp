#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "freediv/ring/monomial.hpp"

namespace freediv {

/// Monomial order on a fixed number of variables, compiled to a weight matrix.
///
/// Every supported kind (lex, degrevlex, weighted, block) becomes a list of sparse integer rows;
/// monomials are compared by the first row on which their weights differ. Block orders stack the
/// rows of the first inner order restricted to the block above those of the second restricted to
/// the complement, so every monomial involving the block is larger than every monomial free of it.
class TermOrder {
 public:
  enum class Kind { lex, degrevlex, weighted, block };

  static TermOrder lex(std::size_t nvars);
  static TermOrder degrevlex(std::size_t nvars);
  /// Weighted degree with strictly positive weights, ties broken by degrevlex.
  static TermOrder weighted(std::vector<long> weights);
  /// `first[i]` marks the eliminated block.
  static TermOrder block(std::vector<bool> first, const TermOrder& inner1, const TermOrder& inner2);
  /// Block order with degrevlex inside both blocks.
  static TermOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Short human-readable description, e.g. "degrevlex" or "block(degrevlex|degrevlex)".
  std::string describe() const;

 private:
  struct Row {
    std::vector<std::pair<std::uint32_t, long>> entries;
    bool all_ones = false;  // total-degree row covering every variable
  };

  TermOrder() = default;
  std::vector<Row> masked_rows(const std::vector<bool>& keep) const;

  Kind kind_ = Kind::degrevlex;
  std::size_t nvars_ = 0;
  std::vector<Row> rows_;
  std::string description_;
};

}  // namespace freediv
