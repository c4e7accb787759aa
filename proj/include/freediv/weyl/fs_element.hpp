#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freediv/ring/polynomial.hpp"
#include "freediv/weyl/operator.hpp"

namespace freediv {

/// Base variables followed by the parameter s.
VarSet fs_varset(const VarSet& base);

/// binom(s, k) = s(s-1)...(s-k+1)/k! in fs_varset(base).
Polynomial binomial_in_s(const VarSet& base, unsigned k);

/// num(x, s) * f^(-m) * f^s, an element of O[1/f, s] f^s.
///
/// The canonical form cancels factors of f from num while m > 0, so equal elements have equal
/// (num, m). f is expected squarefree; that is enforced where divisors are constructed.
class FsElement {
 public:
  /// `num` may live in the base ring or in fs_varset(base).
  FsElement(Polynomial f, const Polynomial& num, unsigned m);
  /// The generator f^s.
  static FsElement fs(const Polynomial& f);

  const Polynomial& f() const { return f_; }
  const Polynomial& numerator() const { return num_; }
  unsigned pole_order() const { return m_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Derivative along the i-th base variable.
  FsElement partial(std::size_t var) const;
  /// Multiplication by a polynomial in the base ring or in fs_varset.
  FsElement times(const Polynomial& g) const;

  friend FsElement operator+(const FsElement& a, const FsElement& b);
  friend FsElement operator-(const FsElement& a, const FsElement& b);
  friend bool operator==(const FsElement& a, const FsElement& b);

  /// "(num) * f^(-m) * f^s".
  std::string to_string() const;

 private:
  void canonicalize();
  void check_same(const FsElement& other) const;

  Polynomial f_;
  Polynomial f_in_fs_;  // f embedded in fs_varset
  Polynomial num_;
  unsigned m_;
};

FsElement act_on_fs(const OperatorWithS& p, const FsElement& e);
FsElement act_on_fs(const DiffOperator& p, const FsElement& e);

/// Sufficient test for e in D[s] f^(s+1): no pole and f divides the numerator, so that
/// e = (num / f) f^(s+1). Used for the class of f^s in D[s] f^s / D[s] f^(s+1).
bool in_f_times_fs(const FsElement& e);

/// C_{P,k}, k = 0..ord P, with P(f^s) = sum_k C_{P,k} binom(s,k) f^(-k) f^s. Polynomials of the
/// base ring; empty for the zero operator.
std::vector<Polynomial> expansion_coefficients(const DiffOperator& p, const Polynomial& f);

}  // namespace freediv
