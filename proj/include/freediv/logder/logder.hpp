#pragma once

#include <optional>
#include <vector>

#include "freediv/groebner/submodule.hpp"
#include "freediv/logder/divisor.hpp"

namespace freediv {

struct LogDerModule {
  enum class Kind { full_log, theta };
  Kind kind = Kind::full_log;
  std::vector<VectorField> generators;
};

/// Rank-n submodule spanned by the coefficient vectors of `fields`.
SubmoduleGB field_module(const VarSet& ring, const std::vector<VectorField>& fields);

/// delta(f) is a multiple of f.
bool is_logarithmic(const DivisorSpec& d, const VectorField& delta);

/// Generators of {delta : delta(f) = 0}, from the syzygies of the gradient.
LogDerModule compute_theta(const DivisorSpec& d);

/// Generators of Der(log f): first n coordinates of the syzygies of (d_1 f, ..., d_n f, f).
LogDerModule compute_logder(const DivisorSpec& d);

struct SaitoResult {
  bool is_basis = false;
  /// c with det = c * f, when such a nonzero rational exists.
  std::optional<Rational> det_scalar;
  Polynomial determinant;
  /// det = u * f with u(0) != 0 but u not constant: a basis of the germ at the origin only.
  bool is_local_basis_at_origin = false;
};

/// Saito's criterion for n logarithmic fields: the coefficient determinant is c * f with c != 0.
/// Throws NotLogarithmicError naming the first non-logarithmic candidate.
SaitoResult saito_criterion(const DivisorSpec& d, const std::vector<VectorField>& candidate);

/// First n-subset of the Der(log f) generators passing Saito's criterion, if any. With
/// `accept_local`, a subset that is only a basis at the origin is returned when no global one exists.
std::optional<std::vector<VectorField>> find_saito_basis(const DivisorSpec& d, bool accept_local = false);

/// A field E with E(f) = f. Uses the weights when the DivisorSpec carries them (or find_weights finds
/// some), otherwise solves the linear system with coefficients of degree <= bound.
std::optional<DiffOperator> find_euler(const DivisorSpec& d, int coeff_degree_bound = 1);

/// delta_i - (delta_i(f)/f) E for every basis field, dropping one so that the remaining n-1
/// together with E still pass Saito's criterion.
std::vector<VectorField> split_logder(const DivisorSpec& d, const std::vector<VectorField>& basis,
                                      const DiffOperator& euler);

/// For g in n-1 variables: Theta of g in one more variable equals Theta_g plus d/d(new variable).
bool variable_extension_check(const Polynomial& g);

/// Drops generators that lie in the span of the others (rank = vector length).
std::vector<Vec> prune_generators(const VarSet& ring, std::size_t rank, std::vector<Vec> gens);

}  // namespace freediv
