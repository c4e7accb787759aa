#include "freediv/analysis/analysis.hpp"

#include "freediv/error.hpp"
#include "freediv/weyl/fs_element.hpp"

namespace freediv {

namespace {

void require_basis(const DivisorSpec& d, const std::vector<VectorField>& basis) {
  auto r = saito_criterion(d, basis);
  if (!r.is_basis && !r.is_local_basis_at_origin)
    throw InapplicableError("the given fields do not pass Saito's criterion");
}

std::vector<VectorField> basis_of(const DivisorSpec& d) {
  auto b = find_saito_basis(d, true);
  if (!b) throw InapplicableError("no Saito basis found for " + d.f().to_string());
  return *b;
}

}  // namespace

KoszulReport koszul_check(const DivisorSpec& d, const std::vector<VectorField>& basis) {
  require_basis(d, basis);
  VarSet t = cotangent_varset(d.ring());
  std::vector<Polynomial> symbols;
  for (const auto& delta : basis) symbols.push_back(delta.symbol());
  SubmoduleGB ideal = SubmoduleGB::ideal(t, symbols);
  int dim = dimension(ideal).dim;
  return KoszulReport{symbols, ideal, dim, dim == int(d.n())};
}

ReesPresentation rees_kernel(const DivisorSpec& d) {
  VarSet cot = cotangent_varset(d.ring());
  VarSet big = cot.appended({cot.fresh_name("t")}, VarKind::rees);
  const std::size_t n = d.n(), t_idx = big.size() - 1;
  Polynomial t = Polynomial::variable(big, t_idx);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial::variable(big, n + i) - t * d.gradient()[i].embed(big));
  SubmoduleGB presented = eliminate(SubmoduleGB::ideal(big, gens), {t_idx});
  std::vector<Polynomial> kernel_gens;
  for (const auto& k : presented.ideal_basis()) kernel_gens.push_back(k.embed(cot));
  SubmoduleGB kernel = SubmoduleGB::ideal(cot, kernel_gens);

  std::vector<Polynomial> deg1;
  for (const auto& theta : compute_theta(d).generators) deg1.push_back(theta.symbol());
  SubmoduleGB deg1_ideal = SubmoduleGB::ideal(cot, deg1);
  std::optional<Polynomial> witness;
  for (const auto& k : kernel_gens)
    if (!deg1_ideal.contains(k)) {
      witness = k;
      break;
    }
  return ReesPresentation{kernel, deg1, !witness.has_value(), witness};
}

std::vector<Polynomial> cross_terms(const DivisorSpec& d) {
  VarSet cot = cotangent_varset(d.ring());
  const std::size_t n = d.n();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial c = d.gradient()[i].embed(cot) * Polynomial::variable(cot, n + j) -
                     d.gradient()[j].embed(cot) * Polynomial::variable(cot, n + i);
      if (!c.is_zero()) out.push_back(c);
    }
  return out;
}

bool isolated_singularity_kernel_check(const DivisorSpec& d) {
  int sing = dimension(SubmoduleGB::ideal(d.ring(), d.gradient())).dim;
  if (sing > 0)
    throw InapplicableError("singular locus has dimension " + std::to_string(sing) + "; not an isolated singularity");
  auto rees = rees_kernel(d);
  SubmoduleGB cross = SubmoduleGB::ideal(rees.kernel.ring(), cross_terms(d));
  return cross.same_as(rees.kernel);
}

bool annfs_membership(const DivisorSpec& d, const OperatorWithS& p) {
  return act_on_fs(p, FsElement::fs(d.f())).is_zero();
}

WitnessCheck linear_type_witness_check(const DivisorSpec& d, const OperatorWithS& p, std::vector<VectorField> theta) {
  if (p.s_degree() > 0) throw InapplicableError("linear_type_witness_check: operator must not involve s");
  if (p.is_zero()) throw StructuralError("linear_type_witness_check: zero operator");
  if (theta.empty()) theta = compute_theta(d).generators;
  VarSet cot = cotangent_varset(d.ring());
  std::vector<Polynomial> symbols;
  for (const auto& v : theta) {
    if (!v.apply(d.f()).is_zero()) throw NotLogarithmicError("field " + v.to_string() + " does not annihilate f");
    symbols.push_back(v.symbol());
  }
  SubmoduleGB ideal = SubmoduleGB::ideal(cot, symbols);
  Polynomial sigma = p.s_free_part().symbol();
  bool in_ann = annfs_membership(d, p);
  return WitnessCheck{in_ann, colon(ideal, sigma), ideal.contains(sigma)};
}

AnnFsReport annfs_report(const DivisorSpec& d, const std::vector<VectorField>& theta,
                         const std::optional<DiffOperator>& euler, const std::vector<OperatorWithS>& extra) {
  AnnFsReport out;
  const VarSet& r = d.ring();
  FsElement fs = FsElement::fs(d.f());
  const char* undecided = "reverse inclusion not decided (would need Groebner bases over the Weyl algebra)";

  bool theta_ok = true;
  for (const auto& v : theta) {
    bool ok = act_on_fs(v.to_operator(), fs).is_zero();
    out.memberships.emplace_back(OperatorWithS(v.to_operator()), ok);
    theta_ok = theta_ok && ok;
  }
  out.claims.push_back({"D*Theta_f is contained in Ann_D(f^s)", theta_ok, undecided});

  if (euler) {
    OperatorWithS es = OperatorWithS(*euler) - OperatorWithS::s(r);
    bool ok = act_on_fs(es, fs).is_zero();
    out.memberships.emplace_back(es, ok);
    out.claims.push_back({"D[s]*(Theta_f, E - s) is contained in Ann_D[s](f^s)", theta_ok && ok, undecided});
  }

  // Class of f^s in D[s] f^s / D[s] f^(s+1): theta kills it outright, f maps f^s onto f^(s+1).
  bool f_ok = in_f_times_fs(act_on_fs(DiffOperator::multiplication(d.f()), fs));
  out.claims.push_back({"D[s]*(Theta_f, f) is contained in the annihilator of the class of f^s modulo D[s]*f^(s+1)",
                        theta_ok && f_ok, undecided});

  for (const auto& p : extra) out.memberships.emplace_back(p, annfs_membership(d, p));
  return out;
}

ProductReport product_stability_report(const Polynomial& f, const Polynomial& g) {
  const VarSet& x = f.ambient();
  const VarSet& y = g.ambient();
  std::vector<std::string> names = x.names();
  for (const auto& n : y.names()) {
    if (x.contains(n)) throw StructuralError("product_stability_check: variable '" + n + "' occurs in both factors");
    names.push_back(n);
  }
  VarSet xy = VarSet::base(names);
  DivisorSpec df(f), dg(g);
  auto bf = basis_of(df), bg = basis_of(dg);
  ProductReport out;
  out.f_koszul = koszul_check(df, bf).is_koszul_free;
  out.g_koszul = koszul_check(dg, bg).is_koszul_free;

  DivisorSpec prod(f.embed(xy) * g.embed(xy));
  std::vector<VectorField> bp;
  for (const auto& v : bf) bp.push_back(v.embed(xy));
  for (const auto& v : bg) bp.push_back(v.embed(xy));
  out.product_koszul = koszul_check(prod, bp).is_koszul_free;

  DivisorSpec dummy(f.embed(xy));
  std::vector<VectorField> bd;
  for (const auto& v : bf) bd.push_back(v.embed(xy));
  for (std::size_t k = x.size(); k < xy.size(); ++k) bd.push_back(VectorField::partial(xy, k));
  out.dummy_koszul = koszul_check(dummy, bd).is_koszul_free;

  out.holds = out.product_koszul == (out.f_koszul && out.g_koszul) && out.dummy_koszul == out.f_koszul;
  return out;
}

bool product_stability_check(const Polynomial& f, const Polynomial& g) { return product_stability_report(f, g).holds; }

}  // namespace freediv
