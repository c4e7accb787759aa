#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freediv/error.hpp"
#include "freediv/logder/logder.hpp"
#include "freediv/weyl/fs_element.hpp"
#include "known_divisors.hpp"
#include "support.hpp"

using namespace freediv;
using testing_support::Gen;
using testing_support::P;
using testing_support::vars;

namespace {

VectorField F(const VarSet& r, const char* text) { return VectorField::from_operator(parse_operator(text, r)); }

std::vector<VectorField> fields(const VarSet& r, std::initializer_list<const char*> texts) {
  std::vector<VectorField> out;
  for (const char* t : texts) out.push_back(F(r, t));
  return out;
}

bool module_contains(const LogDerModule& m, const VectorField& v) {
  return field_module(v.ring(), m.generators).contains(v.coefficients());
}

const VarSet& R2() {
  static VarSet r = vars({"x", "y"});
  return r;
}
const VarSet& R3() {
  static VarSet r = vars({"x", "y", "z"});
  return r;
}

std::vector<DivisorSpec> corpus() {
  return {DivisorSpec(P(R2(), "x*y")),          DivisorSpec(P(R3(), "x*y*z")),
          DivisorSpec(P(R2(), known::kCusp)),   DivisorSpec(P(R2(), known::kThreeLines)),
          DivisorSpec(P(R3(), known::kRectas)), DivisorSpec(P(R3(), known::kSaitoCubic)),
          DivisorSpec(P(R2(), known::kNonLctCurve)), DivisorSpec(P(R3(), "x"))};
}

}  // namespace

TEST_CASE("squarefree test") {
  CHECK_FALSE(is_squarefree(P(R2(), "x^2*y")));
  CHECK(is_squarefree(P(R3(), known::kRectas)));
  CHECK(is_squarefree(P(R2(), known::kCusp)));
  CHECK(is_squarefree(P(R3(), known::kSaitoCubic)));
  CHECK_FALSE(is_squarefree(P(R2(), "(x^2 - y)^2*(x + 1)")));
  CHECK(is_squarefree(P(R2(), "5")));
  CHECK_THROWS_AS(is_squarefree(Polynomial(R2())), StructuralError);
  CHECK_THROWS_AS(DivisorSpec(P(R2(), "x^2*y")), SquarefreeError);
}

TEST_CASE("squarefree agrees with the dimension of the singular locus") {
  // f reduced iff V(f, grad f) has codimension >= 2.
  Gen g(71);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial a = g.polynomial(R2(), 2, 2), b = g.polynomial(R2(), 2, 2);
    if (a.is_constant() || b.is_constant()) continue;
    for (const Polynomial& f : {a * b, a * a * b}) {
      std::vector<Polynomial> gens = {f, f.partial(0), f.partial(1)};
      int dim = dimension(SubmoduleGB::ideal(R2(), gens)).dim;
      CHECK(is_squarefree(f) == (dim <= 0));
    }
  }
}

TEST_CASE("DivisorSpec validation") {
  CHECK_THROWS_AS(DivisorSpec(P(R2(), known::kCusp), std::vector<long>{1, 1}), StructuralError);
  DivisorSpec ok(P(R2(), known::kCusp), std::vector<long>{2, 3});
  CHECK(ok.weights().has_value());
  CHECK_THROWS_AS(DivisorSpec(P(R2(), "x*y"), {}, parse_operator("x*d_x + y*d_y", R2())), StructuralError);
  CHECK_NOTHROW(DivisorSpec(P(R2(), "x*y"), {}, parse_operator("1/2*x*d_x + 1/2*y*d_y", R2())));
}

TEST_CASE("theta") {
  auto nc = compute_theta(DivisorSpec(P(R2(), "x*y")));
  CHECK(field_module(R2(), nc.generators).same_as(field_module(R2(), fields(R2(), {"x*d_x - y*d_y"}))));
  auto cusp = compute_theta(DivisorSpec(P(R2(), known::kCusp)));
  CHECK(field_module(R2(), cusp.generators).same_as(field_module(R2(), fields(R2(), {"2*y*d_x + 3*x^2*d_y"}))));
  auto rect = compute_theta(DivisorSpec(P(R3(), known::kRectas)));
  CHECK(module_contains(rect, F(R3(), known::kRectasFields[0])));
  CHECK(module_contains(rect, F(R3(), known::kRectasFields[1])));
  auto smooth = compute_theta(DivisorSpec(P(R3(), "x")));
  CHECK(field_module(R3(), smooth.generators).same_as(field_module(R3(), fields(R3(), {"d_y", "d_z"}))));
}

TEST_CASE("rectas fields") {
  DivisorSpec d(P(R3(), known::kRectas));
  auto b = fields(R3(), {known::kRectasFields[0], known::kRectasFields[1], known::kRectasFields[2]});
  CHECK(b[0].apply(d.f()).is_zero());
  CHECK(b[1].apply(d.f()).is_zero());
  CHECK(b[2].apply(d.f()) == Rational(4) * d.f());
}

TEST_CASE("logarithmic derivations") {
  auto nc = compute_logder(DivisorSpec(P(R2(), "x*y")));
  CHECK(module_contains(nc, F(R2(), "x*d_x")));
  CHECK(module_contains(nc, F(R2(), "y*d_y")));
  CHECK_FALSE(module_contains(nc, F(R2(), "d_x")));
  auto saito = compute_logder(DivisorSpec(P(R3(), known::kSaitoCubic)));
  for (const char* t : known::kSaitoFields) CHECK(module_contains(saito, F(R3(), t)));
  auto rect = compute_logder(DivisorSpec(P(R3(), known::kRectas)));
  for (const char* t : known::kRectasFields) CHECK(module_contains(rect, F(R3(), t)));
}

TEST_CASE("Saito criterion") {
  DivisorSpec nc(P(R2(), "x*y"));
  auto r = saito_criterion(nc, fields(R2(), {"x*d_x", "y*d_y"}));
  CHECK(r.is_basis);
  CHECK(r.det_scalar == Rational(1));
  DivisorSpec rect(P(R3(), known::kRectas));
  auto rr = saito_criterion(rect, fields(R3(), {known::kRectasFields[0], known::kRectasFields[1],
                                                known::kRectasFields[2]}));
  CHECK(rr.is_basis);
  CHECK(rr.det_scalar == Rational(-16));
  CHECK(rr.determinant == Rational(-16) * rect.f());
  DivisorSpec saito(P(R3(), known::kSaitoCubic));
  auto rs = saito_criterion(saito, fields(R3(), {known::kSaitoFields[0], known::kSaitoFields[1],
                                                 known::kSaitoFields[2]}));
  CHECK(rs.is_basis);
  REQUIRE(rs.det_scalar.has_value());
  CHECK(*rs.det_scalar != 0);
  auto weak = saito_criterion(nc, fields(R2(), {"x*d_x", "x*y*d_y"}));
  CHECK_FALSE(weak.is_basis);
  CHECK_THROWS_AS(saito_criterion(nc, fields(R2(), {"x*d_x", "d_y"})), NotLogarithmicError);
  CHECK_THROWS_AS(saito_criterion(nc, fields(R2(), {"x*d_x"})), StructuralError);
}

TEST_CASE("Saito basis search") {
  auto all = corpus();
  for (std::size_t k = 0; k + 2 < all.size(); ++k) {
    auto b = find_saito_basis(all[k]);
    REQUIRE(b.has_value());
    CHECK(saito_criterion(all[k], *b).is_basis);
  }
  CHECK(find_saito_basis(all.back()).has_value());
  // Not weighted homogeneous: the generators only give a basis of the germ at the origin.
  const DivisorSpec& curve = all[all.size() - 2];
  CHECK_FALSE(find_saito_basis(curve).has_value());
  auto local = find_saito_basis(curve, true);
  REQUIRE(local.has_value());
  auto r = saito_criterion(curve, *local);
  CHECK_FALSE(r.is_basis);
  CHECK(r.is_local_basis_at_origin);
}

TEST_CASE("determinant of any logarithmic fields is divisible by f") {
  Gen g(73);
  for (const auto& d : corpus()) {
    auto gens = compute_logder(d).generators;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<VectorField> cand;
      for (std::size_t k = 0; k < d.n(); ++k) {
        VectorField v(d.ring(), std::vector<Polynomial>(d.n(), Polynomial(d.ring())));
        for (const auto& gen : gens) {
          Polynomial c = g.polynomial(d.ring(), 1, 1);
          std::vector<Polynomial> sum;
          for (std::size_t i = 0; i < d.n(); ++i) sum.push_back(v[i] + c * gen[i]);
          v = VectorField(d.ring(), sum);
        }
        cand.push_back(v);
      }
      auto r = saito_criterion(d, cand);
      CHECK(Polynomial::divide_exact(r.determinant, d.f()).has_value());
    }
  }
}

TEST_CASE("Euler fields") {
  DivisorSpec saito(P(R3(), known::kSaitoCubic));
  auto e = find_euler(saito);
  REQUIRE(e.has_value());
  CHECK(*e == parse_operator("1/12*(2*x*d_x + 3*y*d_y + 4*z*d_z)", R3()));
  DivisorSpec rect(P(R3(), known::kRectas));
  auto er = find_euler(rect);
  REQUIRE(er.has_value());
  CHECK(*er == parse_operator("1/4*(x*d_x + y*d_y)", R3()));
  DivisorSpec shifted(P(R2(), "x + 1"));
  CHECK_FALSE(find_euler(shifted, 0).has_value());
  auto e1 = find_euler(shifted, 1);
  REQUIRE(e1.has_value());
  CHECK(e1->apply(shifted.f()) == shifted.f());
}

TEST_CASE("splitting off the Euler field") {
  DivisorSpec nc(P(R2(), "x*y"));
  auto t = split_logder(nc, fields(R2(), {"x*d_x", "y*d_y"}), parse_operator("x*d_x", R2()));
  REQUIRE(t.size() == 1);
  CHECK(field_module(R2(), t).same_as(field_module(R2(), fields(R2(), {"y*d_y - x*d_x"}))));

  DivisorSpec rect(P(R3(), known::kRectas));
  auto rb = fields(R3(), {known::kRectasFields[0], known::kRectasFields[1], known::kRectasFields[2]});
  auto rt = split_logder(rect, rb, parse_operator("1/4*(x*d_x + y*d_y)", R3()));
  REQUIRE(rt.size() == 2);
  CHECK(rt[0] == rb[0]);
  CHECK(rt[1] == rb[1]);

  DivisorSpec saito(P(R3(), known::kSaitoCubic));
  auto sb = fields(R3(), {known::kSaitoFields[0], known::kSaitoFields[1], known::kSaitoFields[2]});
  auto st = split_logder(saito, sb, *find_euler(saito));
  REQUIRE(st.size() == 2);
  for (const auto& v : st) CHECK(v.apply(saito.f()).is_zero());
}

TEST_CASE("Der(log f) = Theta_f + O E") {
  for (const auto& d : corpus()) {
    auto e = find_euler(d);
    if (!e) continue;
    auto theta = compute_theta(d).generators;
    theta.push_back(VectorField::from_operator(*e));
    auto logder = compute_logder(d).generators;
    CHECK(field_module(d.ring(), theta).same_as(field_module(d.ring(), logder)));
  }
}

TEST_CASE("generator properties on the corpus") {
  for (const auto& d : corpus()) {
    for (const auto& t : compute_theta(d).generators)
      CHECK(act_on_fs(t.to_operator(), FsElement::fs(d.f())).is_zero());
    auto logder = compute_logder(d).generators;
    SubmoduleGB fi = SubmoduleGB::ideal(d.ring(), {d.f()});
    for (const auto& l : logder) CHECK(divide(l.apply(d.f()), fi).remainder[0].is_zero());
    // Brackets of logarithmic fields stay logarithmic.
    for (std::size_t i = 0; i < logder.size(); ++i)
      for (std::size_t j = i + 1; j < logder.size(); ++j) {
        auto b = commutator(logder[i].to_operator(), logder[j].to_operator());
        REQUIRE(b.is_vector_field());
        CHECK(is_logarithmic(d, VectorField::from_operator(b)));
      }
  }
}

TEST_CASE("adding a variable adds its derivative to Theta") {
  CHECK(variable_extension_check(P(R2(), "x*y")));
  CHECK(variable_extension_check(P(R2(), known::kCusp)));
  CHECK(variable_extension_check(P(vars({"x"}), "x")));
  for (const auto& d : corpus()) CHECK(variable_extension_check(d.f()));
}
