#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freediv/ring/polynomial.hpp"
#include "freediv/ring/varset.hpp"

namespace freediv {

/// Variables x_1..x_n followed by d_x1..d_xn, the ring in which normal forms are stored.
VarSet phase_varset(const VarSet& base);

/// Element of the Weyl algebra over `base`, kept in normal form (every x to the left of every d).
/// Internally a polynomial over phase_varset(base): the exponent vector (a, b) stands for x^a d^b.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(const VarSet& base);

  /// Multiplication by a polynomial of the base ring.
  static DiffOperator multiplication(const Polynomial& g);
  static DiffOperator constant(const VarSet& base, const Rational& c);
  static DiffOperator partial(const VarSet& base, std::size_t var);
  /// sum a_i d_i.
  static DiffOperator vector_field(const VarSet& base, const std::vector<Polynomial>& coeffs);
  /// From a phase-ring polynomial read as a normal form.
  static DiffOperator from_normal(const VarSet& base, const Polynomial& normal);

  const VarSet& base() const { return base_; }
  std::size_t nvars() const { return base_.size(); }
  const Polynomial& normal() const { return normal_; }
  bool is_zero() const { return normal_.is_zero(); }
  /// Highest total d-degree; -1 for zero.
  int order() const;

  /// Coefficients a_i when this is sum a_i d_i (order <= 1, no zero-order part); empty otherwise.
  std::vector<Polynomial> vector_field_coefficients() const;
  bool is_vector_field() const;
  /// Zero-order part, as a polynomial of the base ring.
  Polynomial zero_order_part() const;

  /// Principal symbol in cotangent_varset(base). Throws StructuralError for zero.
  Polynomial symbol() const;
  /// Part of exact order k, as a symbol-ring polynomial (zero if there is none).
  Polynomial symbol_of_order(int k) const;

  /// Action on the base ring.
  Polynomial apply(const Polynomial& g) const;

  DiffOperator operator-() const;
  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const Rational& c, const DiffOperator& a);
  DiffOperator& operator+=(const DiffOperator& b) { return *this = *this + b; }
  DiffOperator& operator-=(const DiffOperator& b) { return *this = *this - b; }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b);

  /// Text with x-monomials before d-monomials, e.g. "x*d_x + 1".
  std::string to_string() const;

 private:
  DiffOperator(VarSet base, Polynomial normal);
  void check_same(const DiffOperator& other) const;

  VarSet base_;
  Polynomial normal_;
};

/// [a, b] = ab - ba.
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// Poisson bracket on the symbol ring: sum_i da/dxi_i * db/dx_i - da/dx_i * db/dxi_i.
/// The i-th symbol variable is paired with the i-th base variable.
Polynomial poisson(const Polynomial& a, const Polynomial& b);

/// Parses operator text: base variables, d_<var>, rational constants; products are Weyl products.
DiffOperator parse_operator(std::string_view text, const VarSet& base);

/// Polynomial in a central parameter s with DiffOperator coefficients.
class OperatorWithS {
 public:
  OperatorWithS() = default;
  explicit OperatorWithS(const VarSet& base);
  OperatorWithS(const DiffOperator& p);  // NOLINT: operators embed as s-degree 0
  /// coeffs[j] multiplies s^j.
  OperatorWithS(const VarSet& base, std::vector<DiffOperator> coeffs);
  static OperatorWithS s(const VarSet& base);

  const VarSet& base() const { return base_; }
  const std::vector<DiffOperator>& coefficients() const { return coeffs_; }
  /// Highest power of s present; -1 for zero.
  int s_degree() const { return int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Max order over the coefficients; -1 for zero.
  int order() const;
  /// The s^0 coefficient.
  DiffOperator s_free_part() const;

  OperatorWithS operator-() const;
  friend OperatorWithS operator+(const OperatorWithS& a, const OperatorWithS& b);
  friend OperatorWithS operator-(const OperatorWithS& a, const OperatorWithS& b);
  friend OperatorWithS operator*(const OperatorWithS& a, const OperatorWithS& b);
  friend OperatorWithS operator*(const Rational& c, const OperatorWithS& a);
  OperatorWithS& operator+=(const OperatorWithS& b) { return *this = *this + b; }
  friend bool operator==(const OperatorWithS& a, const OperatorWithS& b);

  std::string to_string() const;

 private:
  void trim();

  VarSet base_;
  std::vector<DiffOperator> coeffs_;
};

/// Like parse_operator, with `s` denoting the central parameter. `base` must not contain s.
OperatorWithS parse_operator_with_s(std::string_view text, const VarSet& base);

}  // namespace freediv
