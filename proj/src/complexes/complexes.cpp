#include "freediv/complexes/complexes.hpp"

#include <algorithm>
#include <map>

#include "freediv/analysis/analysis.hpp"
#include "freediv/error.hpp"
#include "freediv/logder/logder.hpp"
#include "freediv/weyl/fs_element.hpp"

namespace freediv {

std::string to_string(RingKind k) {
  switch (k) {
    case RingKind::commutative: return "commutative";
    case RingKind::weyl: return "weyl";
    case RingKind::weyl_with_s: return "weyl_with_s";
  }
  return "?";
}

std::string to_string(PositionVerdict::Status s) {
  switch (s) {
    case PositionVerdict::Status::exact_verified: return "exact_verified";
    case PositionVerdict::Status::d2_only: return "d2_only";
    case PositionVerdict::Status::failed: return "failed";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

struct Shape {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::vector<std::size_t>>> index;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> position;
};

Shape shape(std::size_t m) {
  Shape s;
  for (std::size_t k = 0; k <= m; ++k) {
    s.index.push_back(wedge_basis(m, k));
    s.ranks.push_back(s.index.back().size());
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t r = 0; r < s.index.back().size(); ++r) pos[s.index.back()[r]] = r;
    s.position.push_back(std::move(pos));
  }
  return s;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& w, std::size_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != p) out.push_back(w[i]);
  return out;
}

// Order-<=1 operator as (a_1, ..., a_n, a_0).
Vec as_vec(const DiffOperator& op) {
  Polynomial a0 = op.zero_order_part();
  DiffOperator rest = op - DiffOperator::multiplication(a0);
  Vec v = rest.is_zero() ? Vec(op.nvars(), Polynomial(op.base())) : rest.vector_field_coefficients();
  if (v.size() != op.nvars()) throw StructuralError("Spencer generator of order > 1: " + op.to_string());
  v.push_back(a0);
  return v;
}

}  // namespace

std::vector<std::vector<std::string>> ChainComplex::entry_strings(std::size_t k) const {
  std::vector<std::vector<std::string>> out;
  if (ring_kind == RingKind::commutative) {
    for (const auto& row : commutative.at(k - 1)) {
      std::vector<std::string> r;
      for (const auto& e : row) r.push_back(e.to_string());
      out.push_back(std::move(r));
    }
  } else {
    for (const auto& row : weyl.at(k - 1)) {
      std::vector<std::string> r;
      for (const auto& e : row) r.push_back(e.is_zero() ? "0" : e.to_string());
      out.push_back(std::move(r));
    }
  }
  return out;
}

ChainComplex build_koszul(const std::vector<Polynomial>& generators, std::optional<VarSet> given) {
  if (generators.empty() && !given) throw StructuralError("build_koszul: no generators and no ring");
  const VarSet ring = given ? *given : generators.front().ambient();
  for (const auto& g : generators) {
    if (!(g.ambient() == ring)) throw StructuralError("build_koszul: generators in different rings");
    if (g.is_zero()) throw StructuralError("build_koszul: zero generator");
  }
  const std::size_t m = generators.size();
  Shape s = shape(m);
  ChainComplex c{RingKind::commutative, ring, s.ranks, s.index, {}, {}};
  for (std::size_t k = 1; k <= m; ++k) {
    PolyMatrix mat(s.ranks[k], std::vector<Polynomial>(s.ranks[k - 1], Polynomial(ring)));
    for (std::size_t r = 0; r < s.ranks[k]; ++r) {
      const auto& w = s.index[k][r];
      for (std::size_t p = 0; p < k; ++p) {
        std::size_t col = s.position[k - 1].at(without(w, p));
        mat[r][col] = p % 2 == 0 ? generators[w[p]] : -generators[w[p]];
      }
    }
    c.commutative.push_back(std::move(mat));
  }
  return c;
}

ChainComplex build_spencer(const DivisorSpec& d, const std::vector<VectorField>& fields, bool include_f,
                           bool over_s) {
  const VarSet& ring = d.ring();
  std::vector<DiffOperator> gens;
  for (const auto& v : fields) {
    if (!(v.ring() == ring)) throw StructuralError("build_spencer: field over a different ring");
    gens.push_back(v.to_operator());
  }
  if (include_f) gens.push_back(DiffOperator::multiplication(d.f()));
  const std::size_t m = gens.size();

  std::vector<Vec> as_vecs;
  for (const auto& g : gens) as_vecs.push_back(as_vec(g));
  SubmoduleGB span(ring, ring.size() + 1, as_vecs);

  // brackets[i][j] for i < j: coefficients of [g_i, g_j] in the generators.
  std::vector<std::vector<std::vector<Polynomial>>> brackets(m, std::vector<std::vector<Polynomial>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      DiffOperator b = commutator(gens[i], gens[j]);
      if (b.is_zero()) continue;
      auto c = span.lift(as_vec(b));
      if (!c)
        throw LieClosureError("bracket of generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " (" + b.to_string() + ") is not in the module they span");
      brackets[i][j] = std::move(*c);
    }

  Shape s = shape(m);
  ChainComplex c{over_s ? RingKind::weyl_with_s : RingKind::weyl, ring, s.ranks, s.index, {}, {}};
  for (std::size_t k = 1; k <= m; ++k) {
    OpMatrix mat(s.ranks[k], std::vector<OperatorWithS>(s.ranks[k - 1], OperatorWithS(ring)));
    for (std::size_t r = 0; r < s.ranks[k]; ++r) {
      const auto& w = s.index[k][r];
      for (std::size_t p = 0; p < k; ++p) {
        std::size_t col = s.position[k - 1].at(without(w, p));
        mat[r][col] += OperatorWithS(p % 2 == 0 ? gens[w[p]] : -gens[w[p]]);
      }
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = p + 1; q < k; ++q) {
          const auto& coeffs = brackets[w[p]][w[q]];
          if (coeffs.empty()) continue;
          // 1-based positions p+1, q+1 give the sign (-1)^(p+q).
          bool neg = (p + q) % 2 == 1;
          std::vector<std::size_t> rest = without(without(w, q), p);
          for (std::size_t l = 0; l < m; ++l) {
            if (coeffs[l].is_zero() || std::find(rest.begin(), rest.end(), l) != rest.end()) continue;
            std::size_t before = std::size_t(std::count_if(rest.begin(), rest.end(), [&](std::size_t x) { return x < l; }));
            std::vector<std::size_t> u = rest;
            u.insert(u.begin() + long(before), l);
            bool sign = neg != (before % 2 == 1);
            DiffOperator e = DiffOperator::multiplication(coeffs[l]);
            mat[r][s.position[k - 1].at(u)] += OperatorWithS(sign ? -e : e);
          }
        }
    }
    c.weyl.push_back(std::move(mat));
  }
  return c;
}

bool verify_d2(const ChainComplex& c) {
  const std::size_t m = c.length();
  for (std::size_t k = 1; k < m; ++k) {
    // d_(-k-1) then d_(-k): rows ranks[k+1], inner ranks[k], columns ranks[k-1].
    for (std::size_t a = 0; a < c.ranks[k + 1]; ++a)
      for (std::size_t col = 0; col < c.ranks[k - 1]; ++col) {
        if (c.ring_kind == RingKind::commutative) {
          Polynomial sum(c.ring);
          for (std::size_t b = 0; b < c.ranks[k]; ++b) sum += c.commutative[k][a][b] * c.commutative[k - 1][b][col];
          if (!sum.is_zero()) return false;
        } else {
          OperatorWithS sum(c.ring);
          for (std::size_t b = 0; b < c.ranks[k]; ++b) sum += c.weyl[k][a][b] * c.weyl[k - 1][b][col];
          if (!sum.is_zero()) return false;
        }
      }
  }
  return true;
}

bool ExactnessReport::exact_at_positive_positions() const {
  for (const auto& p : positions)
    if (p.position > 0 && p.status != PositionVerdict::Status::exact_verified) return false;
  return true;
}

ExactnessReport verify_exactness_commutative(const ChainComplex& c) {
  if (c.ring_kind != RingKind::commutative) throw StructuralError("verify_exactness_commutative: Weyl complex");
  const std::size_t m = c.length();
  ExactnessReport out;
  out.positions.push_back({0, PositionVerdict::Status::d2_only, std::nullopt});
  for (std::size_t k = 1; k <= m; ++k) {
    const PolyMatrix& outgoing = c.commutative[k - 1];
    SubmoduleGB rows(c.ring, c.ranks[k - 1], outgoing);
    std::optional<SubmoduleGB> image;
    if (k < m) image.emplace(c.ring, c.ranks[k], c.commutative[k]);
    PositionVerdict v{k, PositionVerdict::Status::exact_verified, std::nullopt};
    for (const auto& syz : rows.syzygy_generators()) {
      bool zero = std::all_of(syz.begin(), syz.end(), [](const Polynomial& p) { return p.is_zero(); });
      if (zero || (image && image->contains(syz))) continue;
      v.status = PositionVerdict::Status::failed;
      v.witness = syz;
      break;
    }
    out.positions.push_back(std::move(v));
  }
  return out;
}

std::string SpencerReport::summary() const {
  if (certified()) return "resolution certified via graded exactness";
  std::string s = "not certified:";
  if (!d2) s += " (i) composite differentials nonzero;";
  if (!augmentation) s += " (ii) augmentation does not vanish on the generators;";
  if (!graded_matches) s += " (iii) graded complex differs from the Koszul complex;";
  if (!graded_exact) {
    s += " (iv) Koszul complex not exact at position";
    for (const auto& p : exactness.positions)
      if (p.status == PositionVerdict::Status::failed) s += " " + std::to_string(p.position);
    s += ";";
  }
  s.pop_back();
  return s;
}

SpencerReport verify_spencer_resolution(const DivisorSpec& d, const std::vector<VectorField>& theta_basis,
                                        const DiffOperator& euler, SpencerMode mode) {
  const VarSet& ring = d.ring();
  const std::size_t n = d.n();
  if (theta_basis.size() + 1 != n)
    throw InapplicableError("verify_spencer_resolution: need " + std::to_string(n - 1) + " theta fields");
  for (const auto& v : theta_basis)
    if (!v.apply(d.f()).is_zero()) throw NotLogarithmicError("field " + v.to_string() + " does not annihilate f");
  if (!(euler.apply(d.f()) == d.f())) throw InapplicableError("E(f) != f for " + euler.to_string());
  std::vector<VectorField> full = theta_basis;
  full.push_back(VectorField::from_operator(euler));
  auto saito = saito_criterion(d, full);
  if (!saito.is_basis && !saito.is_local_basis_at_origin)
    throw InapplicableError("theta fields and E do not form a Saito basis");

  const bool xi = mode == SpencerMode::xi;
  SpencerReport rep;
  rep.mode = mode;
  rep.spencer = build_spencer(d, theta_basis, xi);
  VarSet cot = cotangent_varset(ring);
  std::vector<Polynomial> symbols;
  std::vector<int> degrees;
  for (const auto& v : theta_basis) {
    symbols.push_back(v.symbol());
    degrees.push_back(1);
  }
  if (xi) {
    symbols.push_back(d.f().embed(cot));
    degrees.push_back(0);
  }
  rep.koszul = build_koszul(symbols, cot);

  rep.d2 = verify_d2(rep.spencer);

  FsElement fs = FsElement::fs(d.f());
  rep.augmentation = true;
  for (const auto& v : theta_basis) rep.augmentation = rep.augmentation && act_on_fs(v.to_operator(), fs).is_zero();
  if (xi)
    rep.augmentation = rep.augmentation && in_f_times_fs(act_on_fs(DiffOperator::multiplication(d.f()), fs));
  else
    rep.augmentation = rep.augmentation && act_on_fs(OperatorWithS(euler) - OperatorWithS::s(ring), fs).is_zero();

  // Graded pieces: a basis element of F_k has degree equal to the number of fields it contains.
  rep.graded_matches = true;
  for (std::size_t k = 1; k <= rep.spencer.length() && rep.graded_matches; ++k)
    for (std::size_t r = 0; r < rep.spencer.ranks[k]; ++r)
      for (std::size_t col = 0; col < rep.spencer.ranks[k - 1]; ++col) {
        int shift = 0;
        for (std::size_t g : rep.spencer.wedge_index[k][r]) shift += degrees[g];
        for (std::size_t g : rep.spencer.wedge_index[k - 1][col]) shift -= degrees[g];
        const OperatorWithS& e = rep.spencer.weyl[k - 1][r][col];
        Polynomial graded = e.is_zero() ? Polynomial(cot) : e.s_free_part().symbol_of_order(shift);
        if (e.s_degree() > 0 || !(graded == rep.koszul.commutative[k - 1][r][col])) rep.graded_matches = false;
      }

  rep.exactness = verify_exactness_commutative(rep.koszul);
  rep.graded_exact = rep.exactness.exact_at_positive_positions();
  if (!xi) {
    // The augmentation to f^s has the symbol map xi_i -> d_i f as graded counterpart.
    auto& v0 = rep.exactness.positions[0];
    SubmoduleGB image = SubmoduleGB::ideal(cot, symbols);
    v0.status = PositionVerdict::Status::exact_verified;
    for (const auto& k : rees_kernel(d).kernel.ideal_basis())
      if (!image.contains(k)) {
        v0.status = PositionVerdict::Status::failed;
        v0.witness = Vec{k};
        break;
      }
    rep.graded_exact = rep.graded_exact && v0.status == PositionVerdict::Status::exact_verified;
  }
  return rep;
}

nlohmann::json complex_to_json(const ChainComplex& c) {
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t k = 1; k <= c.length(); ++k) diffs.push_back(c.entry_strings(k));
  return {{"ranks", c.ranks}, {"differentials", diffs}, {"ring_kind", to_string(c.ring_kind)}};
}

}  // namespace freediv
