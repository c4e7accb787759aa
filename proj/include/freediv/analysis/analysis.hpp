#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freediv/groebner/submodule.hpp"
#include "freediv/logder/logder.hpp"
#include "freediv/weyl/operator.hpp"

namespace freediv {

struct KoszulReport {
  std::vector<Polynomial> symbols;  // sigma(delta_i) in cotangent_varset
  SubmoduleGB symbol_ideal;
  int dim = -1;
  bool is_koszul_free = false;  // dim == n
};

/// Koszul freeness by the dimension of V(sigma(delta_1), ..., sigma(delta_n)) in 2n variables.
/// The basis must pass Saito's criterion (globally or at the origin).
KoszulReport koszul_check(const DivisorSpec& d, const std::vector<VectorField>& basis);

struct ReesPresentation {
  /// ker(xi_i -> t d_i f), in cotangent_varset.
  SubmoduleGB kernel;
  /// Symbols of the Theta_f generators: the degree-one part.
  std::vector<Polynomial> degree1_part;
  bool is_linear_type = false;
  /// A kernel generator outside the ideal of the degree-one part.
  std::optional<Polynomial> witness;
};

ReesPresentation rees_kernel(const DivisorSpec& d);

/// The cross terms d_i f xi_j - d_j f xi_i, i < j.
std::vector<Polynomial> cross_terms(const DivisorSpec& d);

/// Rees kernel equals the ideal of cross terms. Throws InapplicableError unless the singular
/// locus V(d_1 f, ..., d_n f) is finite.
bool isolated_singularity_kernel_check(const DivisorSpec& d);

/// p(f^s) == 0.
bool annfs_membership(const DivisorSpec& d, const OperatorWithS& p);

struct WitnessCheck {
  bool in_ann = false;
  /// (sigma(Theta_f) : sigma(p)) in cotangent_varset.
  SubmoduleGB colon_ideal;
  bool in_theta_ideal = false;
};

/// Theta_f generators are computed when `theta` is empty. p must be s-free.
WitnessCheck linear_type_witness_check(const DivisorSpec& d, const OperatorWithS& p,
                                       std::vector<VectorField> theta = {});

struct InclusionClaim {
  std::string statement;
  bool inclusion_verified = false;
  /// The reverse inclusion is never decided here; this says so.
  std::string equality;
};

struct AnnFsReport {
  std::vector<std::pair<OperatorWithS, bool>> memberships;
  std::vector<InclusionClaim> claims;
};

/// Checks the annihilator inclusions for Theta_f, E - s and f (the latter on the class of f^s
/// modulo D[s] f^(s+1)), plus membership of every operator in `extra`.
AnnFsReport annfs_report(const DivisorSpec& d, const std::vector<VectorField>& theta,
                         const std::optional<DiffOperator>& euler, const std::vector<OperatorWithS>& extra);

struct ProductReport {
  bool f_koszul = false;
  bool g_koszul = false;
  bool product_koszul = false;
  /// f viewed in the variables of f and g, basis extended by the new d/dy.
  bool dummy_koszul = false;
  /// product_koszul == (f_koszul && g_koszul) and dummy_koszul == f_koszul.
  bool holds = false;
};

/// f and g in disjoint variables (rings X and Y); the product lives in X then Y.
ProductReport product_stability_report(const Polynomial& f, const Polynomial& g);
bool product_stability_check(const Polynomial& f, const Polynomial& g);

}  // namespace freediv
