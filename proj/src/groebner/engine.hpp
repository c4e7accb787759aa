#pragma once

// Internal Buchberger machinery shared by the SubmoduleGB front end.

#include <cstdint>
#include <vector>

#include "freediv/groebner/submodule.hpp"
#include "freediv/ring/monomial.hpp"
#include "freediv/ring/rational.hpp"
#include "freediv/ring/term_order.hpp"

namespace freediv::detail {

struct GTerm {
  Monomial mon;
  std::uint32_t comp;
  Rational coeff;
};

/// Module element as a list of terms sorted strictly descending by the module order.
using GPoly = std::vector<GTerm>;

class Ordering {
 public:
  Ordering(const TermOrder& order, ModuleOrder module_order) : order_(order), module_(module_order) {}

  int compare(const Monomial& ma, std::uint32_t ca, const Monomial& mb, std::uint32_t cb) const {
    if (module_.priority_prefix > 0) {
      bool pa = ca < module_.priority_prefix, pb = cb < module_.priority_prefix;
      if (pa != pb) return pa ? 1 : -1;
    }
    if (module_.kind == ModuleOrder::Kind::position_over_term) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return order_.compare(ma, mb);
    }
    int c = order_.compare(ma, mb);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const GTerm& a, const GTerm& b) const { return compare(a.mon, a.comp, b.mon, b.comp); }

  const TermOrder& term_order() const { return order_; }

 private:
  const TermOrder& order_;
  ModuleOrder module_;
};

GPoly to_gpoly(const std::vector<Polynomial>& v, const Ordering& ord);
std::vector<Polynomial> from_gpoly(const GPoly& g, const VarSet& ring, std::size_t rank);

/// Scales so the leading coefficient is 1.
void make_monic(GPoly& g);

/// Full normal form of `f` modulo `basis` (tail reduced). When `quotients` is non-null it
/// receives one polynomial per basis element, as term lists (monomial, coeff) in component 0.
GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis, const Ordering& ord,
                  std::vector<GPoly>* quotients = nullptr);

/// Reduced Gröbner basis of the module generated by `input`, sorted by leading term descending.
std::vector<GPoly> buchberger(std::vector<GPoly> input, const Ordering& ord, bool is_ideal);

/// True iff every S-pair of `basis` reduces to zero modulo `basis`.
bool spairs_reduce_to_zero(const std::vector<GPoly>& basis, const Ordering& ord);

}  // namespace freediv::detail
