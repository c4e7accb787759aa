#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "freediv/ring/polynomial.hpp"
#include "freediv/ring/term_order.hpp"
#include "freediv/ring/varset.hpp"

namespace freediv {

/// Element of a free module R^rank.
using Vec = std::vector<Polynomial>;

/// How module terms are compared. Components below `priority_prefix` outrank every other
/// component, which turns a module GB into an elimination of those components.
struct ModuleOrder {
  enum class Kind { term_over_position, position_over_term };
  Kind kind = Kind::term_over_position;
  std::size_t priority_prefix = 0;
};

/// Submodule of R^rank (an ideal when rank == 1), given by generators. The reduced Gröbner basis
/// and the syzygy/transition data are computed on first use and cached; copies share the cache,
/// and concurrent readers are safe.
class SubmoduleGB {
 public:
  SubmoduleGB(VarSet ring, std::size_t rank, std::vector<Vec> generators, std::optional<TermOrder> order = {},
              ModuleOrder module_order = {});

  /// Ideal of `ring`; degrevlex unless an order is given.
  static SubmoduleGB ideal(const VarSet& ring, std::vector<Polynomial> generators,
                           std::optional<TermOrder> order = {});

  const VarSet& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  bool is_ideal() const { return rank_ == 1; }
  const std::vector<Vec>& generators() const { return generators_; }
  const TermOrder& order() const { return order_; }
  const ModuleOrder& module_order() const { return module_order_; }

  /// Reduced Gröbner basis, sorted by leading term descending.
  const std::vector<Vec>& basis() const;
  /// Rank-1 convenience views.
  std::vector<Polynomial> ideal_generators() const;
  std::vector<Polynomial> ideal_basis() const;

  bool contains(const Vec& v) const;
  bool contains(const Polynomial& p) const;
  /// `other` is a submodule of this one.
  bool contains_all(const SubmoduleGB& other) const;
  bool same_as(const SubmoduleGB& other) const { return contains_all(other) && other.contains_all(*this); }
  bool is_zero() const { return basis().empty(); }
  /// Whole free module (for ideals: the unit ideal).
  bool is_everything() const;

  /// Coefficients c with sum c_i * generators()[i] == v, or nullopt when v is not a member.
  std::optional<std::vector<Polynomial>> lift(const Vec& v) const;

  /// Generators of {c in R^m : sum c_i * generators()[i] = 0}, m = generators().size().
  const std::vector<Vec>& syzygy_generators() const;

  /// Same generators, different order.
  SubmoduleGB with_order(const TermOrder& order, ModuleOrder module_order = {}) const;

 private:
  struct Cache;
  Vec check_vec(const Vec& v) const;
  const Cache& augmented() const;

  VarSet ring_;
  std::size_t rank_;
  std::vector<Vec> generators_;
  TermOrder order_;
  ModuleOrder module_order_;
  std::shared_ptr<Cache> cache_;
};

struct DivisionResult {
  /// One quotient per element of basis.basis().
  std::vector<Polynomial> quotients;
  Vec remainder;
};

/// Division with remainder by the reduced Gröbner basis of `basis`.
DivisionResult divide(const Vec& f, const SubmoduleGB& basis);
DivisionResult divide(const Polynomial& f, const SubmoduleGB& basis);

/// Submodule whose generators are the reduced Gröbner basis of `m`.
SubmoduleGB groebner_basis(const SubmoduleGB& m);

/// Buchberger criterion on the computed basis: every S-pair reduces to zero.
bool satisfies_buchberger_criterion(const SubmoduleGB& m);

/// Module of relations among the input generators of `m` (rank = number of generators).
SubmoduleGB syzygies(const SubmoduleGB& m);

/// i ∩ k[variables outside `block`], via a block order with degrevlex inside each block.
SubmoduleGB eliminate(const SubmoduleGB& ideal, const std::vector<std::size_t>& block);

/// i ∩ j, by eliminating a fresh variable u from u*i + (1-u)*j.
SubmoduleGB intersect(const SubmoduleGB& i, const SubmoduleGB& j);

/// {h : h*g in i}, as (i ∩ <g>) / g.
SubmoduleGB colon(const SubmoduleGB& i, const Polynomial& g);

struct DimensionResult {
  /// Krull dimension of R/i; -1 for the unit ideal.
  int dim = -1;
  /// Variables witnessing the dimension (size dim when dim >= 0).
  std::vector<std::size_t> independent_set;
};

/// Krull dimension of R/i from the leading-term ideal (maximal independent variable set).
DimensionResult dimension(const SubmoduleGB& ideal);

/// Dimension criterion for ξ-homogeneous sequences in a ring with n_base base and t_sym symbol
/// variables: regular iff dim V(seq) = n_base + t_sym - |seq|. Throws InapplicableError when an
/// element is not homogeneous in the symbol variables.
bool is_regular_sequence(std::span<const Polynomial> seq, std::size_t n_base, std::size_t t_sym);

/// Monic (degrevlex) greatest common divisor; gcd(0, 0) = 0.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace freediv
