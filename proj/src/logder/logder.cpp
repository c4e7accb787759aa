#include "freediv/logder/logder.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "freediv/error.hpp"
#include "freediv/ring/linalg.hpp"
#include "freediv/ring/weights.hpp"

namespace freediv {

namespace {

// Rows are fields, columns their coefficients. Expansion along the last row of each leading
// minor, memoised on the column subset.
Polynomial determinant(const std::vector<VectorField>& rows, const VarSet& ring) {
  const std::size_t n = rows.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n > 20) throw StructuralError("determinant: too many variables");
  std::vector<Polynomial> dp(std::size_t(1) << n, Polynomial(ring));
  dp[0] = Polynomial::constant(ring, 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    const std::size_t r = std::size_t(std::popcount(mask)) - 1;
    Polynomial acc(ring);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j)) || rows[r][j].is_zero()) continue;
      std::uint32_t rest = mask & ~(1u << j);
      if (dp[rest].is_zero()) continue;
      int above = std::popcount(rest >> j);  // columns of the minor to the right of j
      Polynomial term = rows[r][j] * dp[rest];
      acc += above % 2 ? -term : term;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

std::vector<VectorField> to_fields(const VarSet& ring, const std::vector<Vec>& vs) {
  std::vector<VectorField> out;
  for (const auto& v : vs) out.emplace_back(ring, v);
  return out;
}

std::vector<Vec> to_vecs(const std::vector<VectorField>& fs) {
  std::vector<Vec> out;
  for (const auto& f : fs) out.push_back(f.coefficients());
  return out;
}

}  // namespace

SubmoduleGB field_module(const VarSet& ring, const std::vector<VectorField>& fields) {
  return SubmoduleGB(ring, ring.size() == 0 ? 1 : ring.size(), to_vecs(fields));
}

std::vector<Vec> prune_generators(const VarSet& ring, std::size_t rank, std::vector<Vec> gens) {
  std::vector<Vec> kept;
  for (auto& g : gens) {
    bool zero = true;
    for (const auto& p : g) zero = zero && p.is_zero();
    if (!zero) kept.push_back(std::move(g));
  }
  for (std::size_t k = kept.size(); k-- > 0;) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    if (SubmoduleGB(ring, rank, others).contains(kept[k])) kept.erase(kept.begin() + long(k));
  }
  return kept;
}

bool is_logarithmic(const DivisorSpec& d, const VectorField& delta) {
  Polynomial image = delta.apply(d.f());
  return image.is_zero() || Polynomial::divide_exact(image, d.f()).has_value();
}

LogDerModule compute_theta(const DivisorSpec& d) {
  const VarSet& ring = d.ring();
  LogDerModule out;
  out.kind = LogDerModule::Kind::theta;
  if (d.n() == 0) return out;
  SubmoduleGB grad = SubmoduleGB::ideal(ring, d.gradient());
  auto syz = prune_generators(ring, d.n(), grad.syzygy_generators());
  out.generators = to_fields(ring, syz);
  for (const auto& g : out.generators)
    if (!g.apply(d.f()).is_zero()) throw InvariantError("compute_theta: generator does not annihilate f");
  return out;
}

LogDerModule compute_logder(const DivisorSpec& d) {
  const VarSet& ring = d.ring();
  const std::size_t n = d.n();
  LogDerModule out;
  out.kind = LogDerModule::Kind::full_log;
  if (n == 0) return out;
  std::vector<Polynomial> gens = d.gradient();
  gens.push_back(d.f());
  SubmoduleGB m = SubmoduleGB::ideal(ring, gens);
  std::vector<Vec> projected;
  for (const auto& c : m.syzygy_generators()) projected.emplace_back(c.begin(), c.begin() + long(n));
  out.generators = to_fields(ring, prune_generators(ring, n, std::move(projected)));
  for (const auto& g : out.generators)
    if (!is_logarithmic(d, g)) throw InvariantError("compute_logder: generator is not logarithmic");
  return out;
}

SaitoResult saito_criterion(const DivisorSpec& d, const std::vector<VectorField>& candidate) {
  if (candidate.size() != d.n())
    throw StructuralError("saito_criterion: need exactly " + std::to_string(d.n()) + " fields");
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (!(candidate[i].ring() == d.ring())) throw StructuralError("saito_criterion: field in a different ring");
    if (!is_logarithmic(d, candidate[i]))
      throw NotLogarithmicError("candidate " + std::to_string(i + 1) + " (" + candidate[i].to_string() +
                                ") is not logarithmic");
  }
  SaitoResult out;
  out.determinant = determinant(candidate, d.ring());
  if (auto q = Polynomial::divide_exact(out.determinant, d.f()); q && !q->is_zero()) {
    if (q->is_constant()) {
      out.is_basis = true;
      out.det_scalar = q->constant_term();
    } else if (q->constant_term() != 0) {
      out.is_local_basis_at_origin = true;
    }
  }
  return out;
}

std::optional<std::vector<VectorField>> find_saito_basis(const DivisorSpec& d, bool accept_local) {
  const std::size_t n = d.n();
  auto gens = compute_logder(d).generators;
  if (gens.size() < n) return std::nullopt;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  const std::size_t m = gens.size();
  std::optional<std::vector<VectorField>> local;
  while (true) {
    std::vector<VectorField> cand;
    for (std::size_t i : pick) cand.push_back(gens[i]);
    auto r = saito_criterion(d, cand);
    if (r.is_basis) return cand;
    if (r.is_local_basis_at_origin && !local) local = cand;
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) return accept_local ? local : std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::optional<DiffOperator> find_euler(const DivisorSpec& d, int coeff_degree_bound) {
  const VarSet& ring = d.ring();
  const std::size_t n = d.n();
  const Polynomial& f = d.f();
  if (f.is_constant()) return std::nullopt;
  std::optional<std::vector<long>> w = d.weights();
  if (!w) w = find_weights(f);
  if (w) {
    long N = weighted_degree(f, *w).degree;
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i)
      c.push_back(Rational((*w)[i], N) * Polynomial::variable(ring, i));
    DiffOperator e = DiffOperator::vector_field(ring, c);
    if (e.apply(f) == f) return e;
  }
  if (coeff_degree_bound < 0) return std::nullopt;
  // Unknown coefficients c_{i,alpha} of x^alpha d_i with |alpha| <= bound.
  std::vector<Monomial> monos{Monomial(n)};
  for (int deg = 1; deg <= coeff_degree_bound; ++deg) {
    std::vector<Monomial> next;
    for (const auto& m : monos)
      if (int(m.degree()) == deg - 1)
        for (std::size_t v = 0; v < n; ++v) next.push_back(m * Monomial::unit(n, v));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    monos.insert(monos.end(), next.begin(), next.end());
  }
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial di = f.partial(i);
    for (const auto& m : monos) {
      unknowns.emplace_back(i, m);
      images.push_back(di.mul_term(m, 1));
    }
  }
  std::map<Monomial, std::size_t> row_of;
  auto row = [&](const Monomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
  for (const auto& [m, c] : f.terms()) row(m);
  for (const auto& p : images)
    for (const auto& [m, c] : p.terms()) row(m);
  linalg::Matrix a(row_of.size(), linalg::Vector(unknowns.size()));
  linalg::Vector rhs(row_of.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [m, c] : images[k].terms()) a[row_of[m]][k] = c;
  for (const auto& [m, c] : f.terms()) rhs[row_of[m]] = c;
  auto sol = linalg::solve(a, rhs, unknowns.size());
  if (!sol) return std::nullopt;
  std::vector<Polynomial> coeffs(n, Polynomial(ring));
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if ((*sol)[k] != 0) coeffs[unknowns[k].first] += Polynomial::monomial(ring, unknowns[k].second, (*sol)[k]);
  DiffOperator e = DiffOperator::vector_field(ring, coeffs);
  if (!(e.apply(f) == f)) throw InvariantError("find_euler: solution does not satisfy E(f) = f");
  return e;
}

std::vector<VectorField> split_logder(const DivisorSpec& d, const std::vector<VectorField>& basis,
                                      const DiffOperator& euler) {
  const Polynomial& f = d.f();
  if (!euler.is_vector_field() || !(euler.apply(f) == f)) throw StructuralError("split_logder: E(f) != f");
  if (basis.size() != d.n()) throw StructuralError("split_logder: basis must have n fields");
  VectorField e = VectorField::from_operator(euler);
  std::vector<VectorField> corrected;
  for (const auto& delta : basis) {
    Polynomial image = delta.apply(f);
    auto h = Polynomial::divide_exact(image, f);
    if (!h) throw InvariantError("split_logder: basis field " + delta.to_string() + " is not logarithmic");
    corrected.push_back(delta - *h * e);
  }
  // Prefer dropping a field that became zero (a multiple of E); otherwise the first drop that works.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < corrected.size(); ++j)
    if (corrected[j].is_zero()) order.push_back(j);
  for (std::size_t j = 0; j < corrected.size(); ++j)
    if (!corrected[j].is_zero()) order.push_back(j);
  for (std::size_t j : order) {
    std::vector<VectorField> theta, cand;
    for (std::size_t i = 0; i < corrected.size(); ++i)
      if (i != j) theta.push_back(corrected[i]);
    cand = theta;
    cand.push_back(e);
    if (saito_criterion(d, cand).is_basis) return theta;
  }
  throw InvariantError("split_logder: no n-1 corrected fields complete E to a basis");
}

bool variable_extension_check(const Polynomial& g) {
  if (g.is_zero()) throw StructuralError("variable_extension_check: zero polynomial");
  const VarSet& small = g.ambient();
  VarSet big = small.appended({small.fresh_name("t")}, VarKind::base);
  std::vector<VectorField> lifted;
  for (const auto& theta : compute_theta(DivisorSpec(g)).generators) lifted.push_back(theta.embed(big));
  lifted.push_back(VectorField::partial(big, big.size() - 1));
  auto direct = compute_theta(DivisorSpec(g.embed(big))).generators;
  return field_module(big, lifted).same_as(field_module(big, direct));
}

}  // namespace freediv
