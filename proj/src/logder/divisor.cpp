#include "freediv/logder/divisor.hpp"

#include <algorithm>

#include "freediv/error.hpp"
#include "freediv/groebner/submodule.hpp"
#include "freediv/ring/weights.hpp"

namespace freediv {

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw StructuralError("is_squarefree: zero polynomial");
  if (f.is_constant()) return true;
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.ambient().size(); ++i)
    if (f.involves(i)) partials.push_back(f.partial(i));
  // Cheapest partials first; gcd usually collapses to 1 after the first step.
  std::sort(partials.begin(), partials.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.num_terms() < b.num_terms(); });
  Polynomial g = f;
  for (const auto& p : partials) {
    g = polynomial_gcd(g, p);
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

DivisorSpec::DivisorSpec(Polynomial f, std::optional<std::vector<long>> weights, std::optional<DiffOperator> euler)
    : f_(std::move(f)), weights_(std::move(weights)), euler_(std::move(euler)) {
  if (f_.is_zero()) throw StructuralError("divisor equation must be nonzero");
  for (VarKind k : f_.ambient().kinds())
    if (k != VarKind::base) throw StructuralError("divisor equation must live in base variables only");
  if (!is_squarefree(f_)) throw SquarefreeError("f = " + f_.to_string() + " is not squarefree");
  for (std::size_t i = 0; i < n(); ++i) gradient_.push_back(f_.partial(i));
  if (weights_) {
    auto wd = weighted_degree(f_, *weights_);
    if (!wd.homogeneous || wd.degenerate) throw StructuralError("f is not weighted homogeneous for the given weights");
  }
  if (euler_) {
    if (!(euler_->base() == ring())) throw StructuralError("Euler field lives in a different ring");
    if (!(euler_->apply(f_) == f_)) throw StructuralError("Euler field does not satisfy E(f) = f");
  }
}

DivisorSpec DivisorSpec::with_weights(std::vector<long> weights) const {
  DivisorSpec out = *this;
  auto wd = weighted_degree(f_, weights);
  if (!wd.homogeneous || wd.degenerate) throw StructuralError("f is not weighted homogeneous for the given weights");
  out.weights_ = std::move(weights);
  return out;
}

DivisorSpec DivisorSpec::with_euler(DiffOperator euler) const {
  DivisorSpec out = *this;
  if (!(euler.base() == ring()) || !(euler.apply(f_) == f_))
    throw StructuralError("Euler field does not satisfy E(f) = f");
  out.euler_ = std::move(euler);
  return out;
}

VectorField::VectorField(const VarSet& ring, std::vector<Polynomial> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.size()) throw StructuralError("vector field needs one coefficient per variable");
  for (const auto& c : coeffs_)
    if (!(c.ambient() == ring_)) throw StructuralError("vector field coefficient in a different ring");
}

VectorField VectorField::from_operator(const DiffOperator& op) {
  if (!op.is_vector_field()) throw StructuralError("operator " + op.to_string() + " is not a vector field");
  return VectorField(op.base(), op.vector_field_coefficients());
}

VectorField VectorField::partial(const VarSet& ring, std::size_t var) {
  std::vector<Polynomial> c(ring.size(), Polynomial(ring));
  c.at(var) = Polynomial::constant(ring, 1);
  return VectorField(ring, std::move(c));
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial VectorField::apply(const Polynomial& g) const {
  if (!(g.ambient() == ring_)) throw StructuralError("vector field applied to a polynomial of another ring");
  Polynomial out(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * g.partial(i);
  return out;
}

DiffOperator VectorField::to_operator() const { return DiffOperator::vector_field(ring_, coeffs_); }

Polynomial VectorField::symbol() const {
  VarSet t = cotangent_varset(ring_);
  Polynomial out(t);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out += coeffs_[i].embed(t) * Polynomial::variable(t, ring_.size() + i);
  return out;
}

VectorField VectorField::embed(const VarSet& target) const {
  std::vector<Polynomial> c(target.size(), Polynomial(target));
  for (std::size_t i = 0; i < ring_.size(); ++i) c[target.require(ring_.name(i))] = coeffs_[i].embed(target);
  return VectorField(target, std::move(c));
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  if (!(a.ring_ == b.ring_)) throw StructuralError("vector fields over different rings");
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
  return VectorField(a.ring_, std::move(c));
}

VectorField operator*(const Polynomial& g, const VectorField& v) {
  std::vector<Polynomial> c;
  for (const auto& a : v.coeffs_) c.push_back(g * a);
  return VectorField(v.ring_, std::move(c));
}

}  // namespace freediv
