#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freediv/analysis/analysis.hpp"
#include "freediv/error.hpp"
#include "freediv/weyl/fs_element.hpp"
#include "known_divisors.hpp"
#include "support.hpp"

using namespace freediv;
using testing_support::P;
using testing_support::vars;

namespace {

std::vector<VectorField> fields(const VarSet& r, std::initializer_list<const char*> texts) {
  std::vector<VectorField> out;
  for (const char* t : texts) out.push_back(VectorField::from_operator(parse_operator(t, r)));
  return out;
}

DivisorSpec spec(const VarSet& r, const char* f) { return DivisorSpec(P(r, f)); }

// Substitute xi_i -> t * d_i f, with t a fresh variable appended to the base ring.
Polynomial substitute_gradient(const Polynomial& k, const DivisorSpec& d) {
  VarSet rt = d.ring().appended({"t"}, VarKind::base);
  std::vector<Polynomial> values;
  for (std::size_t i = 0; i < d.n(); ++i) values.push_back(Polynomial::variable(rt, i));
  Polynomial t = Polynomial::variable(rt, d.n());
  for (std::size_t i = 0; i < d.n(); ++i) values.push_back(t * d.gradient()[i].embed(rt));
  return k.substitute_all(values, rt);
}

std::vector<Polynomial> degree1_generators(const SubmoduleGB& kernel, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& g : kernel.ideal_basis()) {
    bool deg1 = true;
    for (const auto& term : g.terms()) {
      int xi = 0;
      for (std::size_t j = n; j < 2 * n; ++j) xi += term.first[j];
      deg1 = deg1 && xi == 1;
    }
    if (deg1) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("Koszul freeness by dimension") {
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  auto nc = koszul_check(spec(r2, "x*y"), fields(r2, {"x*d_x", "y*d_y"}));
  CHECK(nc.dim == 2);
  CHECK(nc.is_koszul_free);

  auto saito = koszul_check(spec(r3, known::kSaitoCubic),
                            fields(r3, {known::kSaitoFields[0], known::kSaitoFields[1], known::kSaitoFields[2]}));
  CHECK(saito.dim == 3);
  CHECK(saito.is_koszul_free);

  auto rect = koszul_check(spec(r3, known::kRectas),
                           fields(r3, {known::kRectasFields[0], known::kRectasFields[1], known::kRectasFields[2]}));
  CHECK(rect.dim == 4);
  CHECK_FALSE(rect.is_koszul_free);

  CHECK_THROWS_AS(koszul_check(spec(r2, "x*y"), fields(r2, {"x*d_x", "x*y*d_y"})), InapplicableError);
}

TEST_CASE("Rees kernel examples") {
  auto r2 = vars({"x", "y"});
  auto t2 = cotangent_varset(r2);
  auto cusp = rees_kernel(spec(r2, known::kCusp));
  CHECK(cusp.is_linear_type);
  CHECK(cusp.kernel.same_as(SubmoduleGB::ideal(t2, {P(t2, "3*x^2*xi_y + 2*y*xi_x")})));

  auto nc = rees_kernel(spec(r2, "x*y"));
  CHECK(nc.is_linear_type);
  CHECK(nc.kernel.same_as(SubmoduleGB::ideal(t2, {P(t2, "x*xi_x - y*xi_y")})));

  auto r3 = vars({"x", "y", "z"});
  auto rect = rees_kernel(spec(r3, known::kRectas));
  CHECK_FALSE(rect.is_linear_type);
  REQUIRE(rect.witness);
  CHECK_FALSE(SubmoduleGB::ideal(rect.kernel.ring(), rect.degree1_part).contains(*rect.witness));
}

TEST_CASE("linear type on weighted homogeneous free divisors") {
  auto r1 = vars({"x"});
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  CHECK(rees_kernel(spec(r1, "x")).is_linear_type);
  CHECK(rees_kernel(spec(r2, "x*y")).is_linear_type);
  CHECK(rees_kernel(spec(r3, "x*y*z")).is_linear_type);
  CHECK(rees_kernel(spec(r2, known::kCusp)).is_linear_type);
  CHECK(rees_kernel(spec(r2, known::kThreeLines)).is_linear_type);
  CHECK(rees_kernel(spec(r3, known::kSaitoCubic)).is_linear_type);
}

TEST_CASE("Rees kernel soundness and degree-one agreement") {
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  std::vector<DivisorSpec> ds = {spec(r2, known::kCusp), spec(r2, known::kThreeLines), spec(r2, known::kNonLctCurve),
                                 spec(r3, known::kRectas), spec(r3, known::kQuadricCone), spec(r3, "x*y*z")};
  for (const auto& d : ds) {
    CAPTURE(d.f().to_string());
    auto rp = rees_kernel(d);
    for (const auto& k : rp.kernel.ideal_basis()) CHECK(substitute_gradient(k, d).is_zero());
    for (const auto& s : rp.degree1_part) {
      std::vector<Polynomial> values;
      for (std::size_t i = 0; i < d.n(); ++i) values.push_back(Polynomial::variable(d.ring(), i));
      for (std::size_t i = 0; i < d.n(); ++i) values.push_back(d.gradient()[i]);
      CHECK(s.substitute_all(values, d.ring()).is_zero());
    }
    // The reduced GB in degree 1 and the Theta symbols generate the same module of relations.
    auto ring = rp.kernel.ring();
    auto theta = SubmoduleGB::ideal(ring, rp.degree1_part);
    auto deg1 = SubmoduleGB::ideal(ring, degree1_generators(rp.kernel, d.n()));
    CHECK(theta.contains_all(deg1));
    CHECK(deg1.contains_all(theta));
  }
}

TEST_CASE("isolated singularities") {
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  CHECK(isolated_singularity_kernel_check(spec(r2, known::kCusp)));
  CHECK(isolated_singularity_kernel_check(spec(r3, known::kQuadricCone)));
  CHECK(isolated_singularity_kernel_check(spec(r2, known::kNonLctCurve)));
  CHECK_THROWS_AS(isolated_singularity_kernel_check(spec(r3, known::kRectas)), InapplicableError);
}

TEST_CASE("annihilator membership") {
  auto r3 = vars({"x", "y", "z"});
  auto d = spec(r3, known::kRectas);
  CHECK(annfs_membership(d, OperatorWithS(parse_operator(known::kRectasP, r3))));
  // The first two basis fields kill f; the third is 4 times an Euler field.
  CHECK(annfs_membership(d, OperatorWithS(parse_operator(known::kRectasFields[0], r3))));
  CHECK(annfs_membership(d, OperatorWithS(parse_operator(known::kRectasFields[1], r3))));
  CHECK_FALSE(annfs_membership(d, OperatorWithS(parse_operator(known::kRectasFields[2], r3))));
  CHECK(annfs_membership(d, parse_operator_with_s("1/4*x*d_x + 1/4*y*d_y - s", r3)));
  CHECK_FALSE(annfs_membership(d, OperatorWithS(parse_operator("d_x", r3))));

  auto saito = spec(r3, known::kSaitoCubic);
  auto e = find_euler(saito);
  REQUIRE(e);
  CHECK(annfs_membership(saito, OperatorWithS(*e) - OperatorWithS::s(r3)));
}

TEST_CASE("colon ideal witness") {
  auto r3 = vars({"x", "y", "z"});
  auto t3 = cotangent_varset(r3);
  auto d = spec(r3, known::kRectas);
  auto w = linear_type_witness_check(d, OperatorWithS(parse_operator(known::kRectasP, r3)));
  CHECK(w.in_ann);
  CHECK_FALSE(w.in_theta_ideal);
  CHECK(w.colon_ideal.same_as(SubmoduleGB::ideal(t3, {P(t3, "x"), P(t3, "y")})));

  auto own = linear_type_witness_check(d, OperatorWithS(parse_operator(known::kRectasFields[1], r3)));
  CHECK(own.in_ann);
  CHECK(own.in_theta_ideal);
  CHECK(own.colon_ideal.is_everything());

  auto dz = linear_type_witness_check(spec(r3, "x*y"), OperatorWithS(parse_operator("d_z", r3)));
  CHECK(dz.in_ann);
  CHECK(dz.in_theta_ideal);

  CHECK_THROWS_AS(linear_type_witness_check(d, parse_operator_with_s("s*d_x", r3)), InapplicableError);
}

TEST_CASE("no counterexample on linear type divisors") {
  auto r2 = vars({"x", "y"});
  auto d = spec(r2, known::kCusp);
  REQUIRE(rees_kernel(d).is_linear_type);
  std::vector<const char*> ops = {"2*y*d_x + 3*x^2*d_y", "(2*y*d_x + 3*x^2*d_y)^2", "x*(2*y*d_x + 3*x^2*d_y)", "d_x"};
  for (const char* t : ops) {
    auto w = linear_type_witness_check(d, OperatorWithS(parse_operator(t, r2)));
    CHECK_FALSE((w.in_ann && !w.in_theta_ideal));
  }
}

TEST_CASE("annihilator report inclusions") {
  auto r2 = vars({"x", "y"});
  auto d = spec(r2, known::kThreeLines);
  auto theta = compute_theta(d).generators;
  auto report = annfs_report(d, theta, find_euler(d), {OperatorWithS(parse_operator("d_x", r2))});
  REQUIRE(report.claims.size() == 3);
  for (const auto& c : report.claims) {
    CHECK(c.inclusion_verified);
    CHECK_FALSE(c.equality.empty());
  }
  CHECK_FALSE(report.memberships.back().second);
  for (std::size_t i = 0; i + 1 < report.memberships.size(); ++i) CHECK(report.memberships[i].second);

  // Multiplication by x is not in the annihilator of the class of f^s.
  CHECK_FALSE(in_f_times_fs(act_on_fs(parse_operator("x", r2), FsElement::fs(d.f()))));
}

TEST_CASE("product stability") {
  auto rx = vars({"x", "y"});
  auto rz = vars({"z"});
  auto r_uv = vars({"u", "v"});
  auto p = product_stability_report(P(rx, "x*y"), P(rz, "z"));
  CHECK(p.product_koszul);
  CHECK(p.holds);

  auto cusp = product_stability_report(P(rx, known::kCusp), P(rz, "z"));
  CHECK(cusp.f_koszul);
  CHECK(cusp.dummy_koszul);
  CHECK(cusp.holds);

  auto curves = product_stability_report(P(rx, known::kCusp), P(r_uv, "u*v*(u+v)"));
  CHECK(curves.product_koszul);
  CHECK(curves.holds);

  CHECK_THROWS_AS(product_stability_check(P(rx, "x"), P(vars({"y", "w"}), "y*w")), StructuralError);
}
