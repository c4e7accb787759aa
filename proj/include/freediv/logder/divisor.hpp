#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freediv/ring/polynomial.hpp"
#include "freediv/weyl/operator.hpp"

namespace freediv {

/// True iff f has no repeated nonconstant factor: gcd(f, d_1 f, ..., d_n f) is constant.
bool is_squarefree(const Polynomial& f);

/// A reduced equation f together with optional homogeneity data.
/// Construction verifies squarefreeness, the weights and E(f) = f, throwing on failure.
class DivisorSpec {
 public:
  explicit DivisorSpec(Polynomial f, std::optional<std::vector<long>> weights = {},
                       std::optional<DiffOperator> euler = {});

  const Polynomial& f() const { return f_; }
  const VarSet& ring() const { return f_.ambient(); }
  std::size_t n() const { return f_.ambient().size(); }
  const std::optional<std::vector<long>>& weights() const { return weights_; }
  const std::optional<DiffOperator>& euler() const { return euler_; }
  /// (d_1 f, ..., d_n f).
  const std::vector<Polynomial>& gradient() const { return gradient_; }

  DivisorSpec with_weights(std::vector<long> weights) const;
  DivisorSpec with_euler(DiffOperator euler) const;

 private:
  Polynomial f_;
  std::vector<Polynomial> gradient_;
  std::optional<std::vector<long>> weights_;
  std::optional<DiffOperator> euler_;
};

/// sum a_i d_i over a base ring.
class VectorField {
 public:
  VectorField() = default;
  VectorField(const VarSet& ring, std::vector<Polynomial> coeffs);
  /// Throws StructuralError unless `op` is a vector field.
  static VectorField from_operator(const DiffOperator& op);
  static VectorField partial(const VarSet& ring, std::size_t var);

  const VarSet& ring() const { return ring_; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  Polynomial apply(const Polynomial& g) const;
  DiffOperator to_operator() const;
  /// sum a_i xi_i in cotangent_varset(ring).
  Polynomial symbol() const;
  /// Same field in a larger ring (matching variables by name, new coefficients zero).
  VectorField embed(const VarSet& target) const;

  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Polynomial& g, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const { return to_operator().to_string(); }

 private:
  VarSet ring_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace freediv
