#include "freediv/groebner/submodule.hpp"

#include <mutex>

#include "engine.hpp"
#include "freediv/error.hpp"

namespace freediv {

using detail::GPoly;
using detail::Ordering;

struct SubmoduleGB::Cache {
  std::once_flag gb_once;
  std::vector<GPoly> gb;
  std::vector<Vec> gb_vecs;

  std::once_flag aug_once;
  std::vector<GPoly> aug;  // GB of (g_i, e_i) with the first `rank` components prioritised
  std::vector<Vec> syz;
};

SubmoduleGB::SubmoduleGB(VarSet ring, std::size_t rank, std::vector<Vec> generators, std::optional<TermOrder> order,
                         ModuleOrder module_order)
    : ring_(std::move(ring)),
      rank_(rank),
      order_(order ? *order : TermOrder::degrevlex(ring_.size())),
      module_order_(module_order),
      cache_(std::make_shared<Cache>()) {
  if (rank_ == 0) throw StructuralError("SubmoduleGB: rank must be positive");
  if (order_.nvars() != ring_.size()) throw StructuralError("SubmoduleGB: term order size does not match ring");
  generators_.reserve(generators.size());
  for (auto& g : generators) generators_.push_back(check_vec(g));
}

SubmoduleGB SubmoduleGB::ideal(const VarSet& ring, std::vector<Polynomial> generators, std::optional<TermOrder> order) {
  std::vector<Vec> gens;
  gens.reserve(generators.size());
  for (auto& g : generators) gens.push_back(Vec{std::move(g)});
  return SubmoduleGB(ring, 1, std::move(gens), std::move(order));
}

Vec SubmoduleGB::check_vec(const Vec& v) const {
  if (v.size() != rank_) throw StructuralError("module element has wrong rank");
  for (const auto& p : v)
    if (!(p.ambient() == ring_)) throw StructuralError("module element lives in a different ring");
  return v;
}

const std::vector<Vec>& SubmoduleGB::basis() const {
  std::call_once(cache_->gb_once, [this] {
    Ordering ord(order_, module_order_);
    std::vector<GPoly> input;
    for (const auto& g : generators_) input.push_back(detail::to_gpoly(g, ord));
    cache_->gb = detail::buchberger(std::move(input), ord, rank_ == 1);
    for (const auto& g : cache_->gb) cache_->gb_vecs.push_back(detail::from_gpoly(g, ring_, rank_));
  });
  return cache_->gb_vecs;
}

const SubmoduleGB::Cache& SubmoduleGB::augmented() const {
  std::call_once(cache_->aug_once, [this] {
    const std::size_t m = generators_.size();
    ModuleOrder mo{module_order_.kind, rank_};
    Ordering ord(order_, mo);
    std::vector<GPoly> input;
    for (std::size_t i = 0; i < m; ++i) {
      Vec v = generators_[i];
      for (std::size_t j = 0; j < m; ++j)
        v.push_back(i == j ? Polynomial::constant(ring_, 1) : Polynomial(ring_));
      input.push_back(detail::to_gpoly(v, ord));
    }
    cache_->aug = detail::buchberger(std::move(input), ord, false);
    for (const auto& g : cache_->aug) {
      if (g[0].comp < rank_) continue;
      auto full = detail::from_gpoly(g, ring_, rank_ + m);
      cache_->syz.emplace_back(full.begin() + long(rank_), full.end());
    }
  });
  return *cache_;
}

std::vector<Polynomial> SubmoduleGB::ideal_generators() const {
  if (rank_ != 1) throw StructuralError("ideal_generators: not an ideal");
  std::vector<Polynomial> out;
  for (const auto& g : generators_) out.push_back(g[0]);
  return out;
}

std::vector<Polynomial> SubmoduleGB::ideal_basis() const {
  if (rank_ != 1) throw StructuralError("ideal_basis: not an ideal");
  std::vector<Polynomial> out;
  for (const auto& g : basis()) out.push_back(g[0]);
  return out;
}

bool SubmoduleGB::contains(const Vec& v) const {
  Vec w = check_vec(v);
  basis();
  Ordering ord(order_, module_order_);
  return detail::normal_form(detail::to_gpoly(w, ord), cache_->gb, ord).empty();
}

bool SubmoduleGB::contains(const Polynomial& p) const { return contains(Vec{p}); }

bool SubmoduleGB::contains_all(const SubmoduleGB& other) const {
  if (!(other.ring_ == ring_) || other.rank_ != rank_) throw StructuralError("contains_all: incompatible modules");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

bool SubmoduleGB::is_everything() const {
  const auto& b = basis();
  std::size_t units = 0;
  for (const auto& v : b) {
    std::size_t nonzero = 0;
    bool unit = false;
    for (const auto& p : v)
      if (!p.is_zero()) {
        ++nonzero;
        unit = p.is_constant();
      }
    if (nonzero == 1 && unit) ++units;
  }
  if (rank_ == 1) return units > 0;
  for (std::size_t c = 0; c < rank_; ++c) {
    Vec e(rank_, Polynomial(ring_));
    e[c] = Polynomial::constant(ring_, 1);
    if (!contains(e)) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> SubmoduleGB::lift(const Vec& v) const {
  Vec w = check_vec(v);
  const std::size_t m = generators_.size();
  const auto& aug = augmented().aug;
  ModuleOrder mo{module_order_.kind, rank_};
  Ordering ord(order_, mo);
  for (std::size_t j = 0; j < m; ++j) w.push_back(Polynomial(ring_));
  GPoly rem = detail::normal_form(detail::to_gpoly(w, ord), aug, ord);
  for (const auto& t : rem)
    if (t.comp < rank_) return std::nullopt;
  auto full = detail::from_gpoly(rem, ring_, rank_ + m);
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < m; ++j) coeffs.push_back(-full[rank_ + j]);
  for (std::size_t c = 0; c < rank_; ++c) {
    Polynomial s(ring_);
    for (std::size_t j = 0; j < m; ++j) s += coeffs[j] * generators_[j][c];
    if (!(s == v[c])) throw InvariantError("lift: transition coefficients do not reproduce the vector");
  }
  return coeffs;
}

const std::vector<Vec>& SubmoduleGB::syzygy_generators() const { return augmented().syz; }

SubmoduleGB SubmoduleGB::with_order(const TermOrder& order, ModuleOrder module_order) const {
  return SubmoduleGB(ring_, rank_, generators_, order, module_order);
}

DivisionResult divide(const Vec& f, const SubmoduleGB& basis) {
  const auto& b = basis.basis();
  Ordering ord(basis.order(), basis.module_order());
  std::vector<GPoly> gb;
  for (const auto& v : b) gb.push_back(detail::to_gpoly(v, ord));
  if (f.size() != basis.rank()) throw StructuralError("divide: wrong rank");
  std::vector<GPoly> q;
  GPoly rem = detail::normal_form(detail::to_gpoly(f, ord), gb, ord, &q);
  DivisionResult out;
  for (auto& terms : q) {
    std::vector<Polynomial::Term> t;
    for (auto& g : terms) t.emplace_back(g.mon, g.coeff);
    out.quotients.push_back(Polynomial::from_terms(basis.ring(), std::move(t)));
  }
  out.remainder = detail::from_gpoly(rem, basis.ring(), basis.rank());
  return out;
}

DivisionResult divide(const Polynomial& f, const SubmoduleGB& basis) { return divide(Vec{f}, basis); }

SubmoduleGB groebner_basis(const SubmoduleGB& m) {
  return SubmoduleGB(m.ring(), m.rank(), m.basis(), m.order(), m.module_order());
}

bool satisfies_buchberger_criterion(const SubmoduleGB& m) {
  Ordering ord(m.order(), m.module_order());
  std::vector<GPoly> gb;
  for (const auto& v : m.basis()) gb.push_back(detail::to_gpoly(v, ord));
  return detail::spairs_reduce_to_zero(gb, ord);
}

SubmoduleGB syzygies(const SubmoduleGB& m) {
  std::size_t count = m.generators().size();
  return SubmoduleGB(m.ring(), count == 0 ? 1 : count, m.syzygy_generators(), m.order());
}

}  // namespace freediv
