#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freediv/ring/monomial.hpp"
#include "freediv/ring/rational.hpp"
#include "freediv/ring/term_order.hpp"
#include "freediv/ring/varset.hpp"

namespace freediv {

/// Sparse multivariate polynomial with exact rational coefficients over a declared VarSet.
///
/// Terms are kept sorted by the plain exponent-vector comparison with no zero coefficients,
/// so two polynomials over the same ambient are equal iff their term vectors are equal.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  /// Zero polynomial in the empty ring; only useful as a placeholder.
  Polynomial() = default;
  explicit Polynomial(VarSet ambient);

  static Polynomial constant(const VarSet& ambient, const Rational& c);
  static Polynomial variable(const VarSet& ambient, std::size_t var);
  static Polynomial variable(const VarSet& ambient, std::string_view name);
  static Polynomial monomial(const VarSet& ambient, const Monomial& m, const Rational& c = 1);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(const VarSet& ambient, std::vector<Term> terms);

  const VarSet& ambient() const { return ambient_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Maximum total degree; -1 for zero.
  int total_degree() const;
  /// Maximum total degree counting only the given variables; -1 for zero.
  int degree_in(std::span<const std::size_t> vars) const;
  bool involves(std::size_t var) const;

  /// Largest term under `order`; requires nonzero.
  const Term& leading_term(const TermOrder& order) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Formal partial derivative.
  Polynomial partial(std::size_t var) const;
  Polynomial partial(std::string_view name) const;

  /// Same polynomial in `target`, matching variables by name. Throws if a used variable is missing.
  Polynomial embed(const VarSet& target) const;
  /// Same exponent vectors, different names (sizes must agree).
  Polynomial reinterpret(const VarSet& target) const;
  /// Replace one variable by a polynomial of the same ambient.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Replace every variable at once; `values[i]` lives in the target ring.
  Polynomial substitute_all(std::span<const Polynomial> values, const VarSet& target) const;
  /// Collect by powers of `var`: result[k] is the coefficient of var^k (free of var).
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Exact quotient a / b when b divides a, std::nullopt otherwise.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  /// Text in the input grammar, terms sorted descending by `order` (default degrevlex).
  std::string to_string() const;
  std::string to_string(const TermOrder& order) const;

 private:
  void check_same(const Polynomial& other) const;

  VarSet ambient_;
  std::vector<Term> terms_;
};

std::string to_string(const Polynomial& p);

/// Monomial printed as x^2*y (or "1").
std::string monomial_to_string(const VarSet& ambient, const Monomial& m);

}  // namespace freediv
