#include <algorithm>
#include <bit>

#include "freediv/error.hpp"
#include "freediv/groebner/submodule.hpp"

namespace freediv {

namespace {

void require_ideal(const SubmoduleGB& m, const char* op) {
  if (!m.is_ideal()) throw StructuralError(std::string(op) + ": expected an ideal");
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_term(TermOrder::degrevlex(p.ambient().size())).second;
  return Rational(1 / lc) * p;
}

}  // namespace

SubmoduleGB eliminate(const SubmoduleGB& ideal, const std::vector<std::size_t>& block) {
  require_ideal(ideal, "eliminate");
  const VarSet& ring = ideal.ring();
  for (std::size_t b : block)
    if (b >= ring.size()) throw StructuralError("eliminate: variable index out of range");
  SubmoduleGB elim = ideal.with_order(TermOrder::elimination(ring.size(), block));
  std::vector<Polynomial> kept;
  for (const auto& v : elim.basis()) {
    bool free = std::none_of(block.begin(), block.end(), [&](std::size_t b) { return v[0].involves(b); });
    if (free) kept.push_back(v[0]);
  }
  return SubmoduleGB::ideal(ring, std::move(kept), ideal.order());
}

SubmoduleGB intersect(const SubmoduleGB& i, const SubmoduleGB& j) {
  require_ideal(i, "intersect");
  require_ideal(j, "intersect");
  if (!(i.ring() == j.ring())) throw StructuralError("intersect: ideals live in different rings");
  const VarSet& ring = i.ring();
  VarSet big = ring.prepended({ring.fresh_name("u")}, VarKind::param);
  Polynomial u = Polynomial::variable(big, 0);
  Polynomial one_minus_u = Polynomial::constant(big, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(u * g[0].embed(big));
  for (const auto& g : j.generators()) gens.push_back(one_minus_u * g[0].embed(big));
  SubmoduleGB joint = SubmoduleGB::ideal(big, std::move(gens), TermOrder::elimination(big.size(), {0}));
  std::vector<Polynomial> kept;
  for (const auto& v : joint.basis())
    if (!v[0].involves(0)) kept.push_back(v[0].embed(ring));
  return SubmoduleGB::ideal(ring, std::move(kept), i.order());
}

SubmoduleGB colon(const SubmoduleGB& i, const Polynomial& g) {
  require_ideal(i, "colon");
  if (g.is_zero()) throw StructuralError("colon: divisor must be nonzero");
  if (g.is_constant()) return i;
  SubmoduleGB meet = intersect(i, SubmoduleGB::ideal(i.ring(), {g}, i.order()));
  std::vector<Polynomial> out;
  for (const auto& h : meet.ideal_basis()) {
    auto q = Polynomial::divide_exact(h, g);
    if (!q) throw InvariantError("colon: intersection element not divisible by g");
    out.push_back(*q);
  }
  return SubmoduleGB::ideal(i.ring(), std::move(out), i.order());
}

DimensionResult dimension(const SubmoduleGB& ideal) {
  require_ideal(ideal, "dimension");
  const std::size_t n = ideal.ring().size();
  if (n > 32) throw StructuralError("dimension: at most 32 variables supported");
  DimensionResult out;
  const auto& basis = ideal.basis();
  std::vector<std::uint32_t> supports;
  for (const auto& v : basis) {
    std::uint32_t s = v[0].leading_term(ideal.order()).first.support();
    if (s == 0) return out;  // unit ideal
    supports.push_back(s);
  }
  // Largest S such that no leading monomial is supported inside S; ties go to the smallest mask.
  const std::uint64_t limit = std::uint64_t(1) << n;
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    std::uint32_t m = std::uint32_t(mask);
    bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~m) == 0; });
    if (ok) {
      best = size;
      best_mask = m;
    }
  }
  out.dim = best;
  for (std::size_t k = 0; k < n; ++k)
    if (best_mask & (std::uint32_t(1) << k)) out.independent_set.push_back(k);
  return out;
}

bool is_regular_sequence(std::span<const Polynomial> seq, std::size_t n_base, std::size_t t_sym) {
  if (seq.empty()) return true;
  const VarSet& ring = seq[0].ambient();
  if (ring.size() != n_base + t_sym)
    throw StructuralError("is_regular_sequence: ring size does not match n_base + t_sym");
  std::vector<std::size_t> sym = ring.indices_of(VarKind::symbol);
  if (sym.size() != t_sym) {
    sym.clear();
    for (std::size_t k = n_base; k < ring.size(); ++k) sym.push_back(k);
  }
  for (const auto& p : seq) {
    if (!(p.ambient() == ring)) throw StructuralError("is_regular_sequence: mixed rings");
    int deg = -1;
    for (const auto& [m, c] : p.terms()) {
      int d = 0;
      for (std::size_t k : sym) d += int(m[k]);
      if (deg >= 0 && d != deg) throw InapplicableError("is_regular_sequence: element not homogeneous in the symbol variables");
      deg = d;
    }
  }
  SubmoduleGB i = SubmoduleGB::ideal(ring, std::vector<Polynomial>(seq.begin(), seq.end()));
  return dimension(i).dim == int(n_base + t_sym) - int(seq.size());
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("polynomial_gcd: different rings");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ambient(), 1);
  if (auto q = Polynomial::divide_exact(a, b)) return monic(b);
  if (auto q = Polynomial::divide_exact(b, a)) return monic(a);
  const VarSet& ring = a.ambient();
  auto meet = intersect(SubmoduleGB::ideal(ring, {a}), SubmoduleGB::ideal(ring, {b})).ideal_basis();
  if (meet.size() != 1) throw InvariantError("polynomial_gcd: intersection of principal ideals is not principal");
  auto g = Polynomial::divide_exact(a * b, meet[0]);
  if (!g) throw InvariantError("polynomial_gcd: lcm does not divide the product");
  return monic(*g);
}

}  // namespace freediv
