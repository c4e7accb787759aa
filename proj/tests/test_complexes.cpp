#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freediv/complexes/complexes.hpp"
#include "freediv/error.hpp"
#include "freediv/logder/logder.hpp"
#include "known_divisors.hpp"
#include "support.hpp"

using namespace freediv;
using testing_support::P;
using testing_support::vars;

namespace {

VectorField F(const VarSet& r, const char* text) { return VectorField::from_operator(parse_operator(text, r)); }

std::vector<VectorField> theta_of(const DivisorSpec& d, DiffOperator& euler) {
  auto basis = find_saito_basis(d, true);
  REQUIRE(basis);
  auto e = find_euler(d);
  REQUIRE(e);
  euler = *e;
  return split_logder(d, *basis, euler);
}

// Sign of sorting `w` after relabelling by perm, and the sorted result.
std::pair<int, std::vector<std::size_t>> relabel(const std::vector<std::size_t>& w, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> u;
  for (auto i : w) u.push_back(perm[i]);
  int sign = 1;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b)
      if (u[a] > u[b]) sign = -sign;
  std::sort(u.begin(), u.end());
  return {sign, u};
}

std::size_t index_in(const ChainComplex& c, std::size_t k, const std::vector<std::size_t>& w) {
  const auto& idx = c.wedge_index[k];
  return std::size_t(std::find(idx.begin(), idx.end(), w) - idx.begin());
}

}  // namespace

TEST_CASE("wedge bases are lexicographic") {
  auto b = wedge_basis(4, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == std::vector<std::size_t>{0, 1});
  CHECK(b[1] == std::vector<std::size_t>{0, 2});
  CHECK(b[2] == std::vector<std::size_t>{0, 3});
  CHECK(b[3] == std::vector<std::size_t>{1, 2});
  CHECK(b[5] == std::vector<std::size_t>{2, 3});
  CHECK(wedge_basis(3, 0).size() == 1);
  CHECK(wedge_basis(3, 3).size() == 1);
  CHECK(wedge_basis(2, 3).empty());
  std::size_t binom[] = {1, 5, 10, 10, 5, 1};
  for (std::size_t k = 0; k <= 5; ++k) CHECK(wedge_basis(5, k).size() == binom[k]);
}

TEST_CASE("small Koszul complexes") {
  auto t = cotangent_varset(vars({"x", "y"}));
  Polynomial a = P(t, "xi_x"), b = P(t, "xi_y");
  auto one = build_koszul({a});
  CHECK(one.length() == 1);
  CHECK(one.commutative[0][0][0] == a);

  auto two = build_koszul({a, b});
  CHECK(two.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(two.commutative[1][0][0] == -b);
  CHECK(two.commutative[1][0][1] == a);
  CHECK(two.commutative[0][0][0] == a);
  CHECK(two.commutative[0][1][0] == b);
  CHECK(verify_d2(two));

  auto xi = build_koszul({P(t, "x*xi_x - y*xi_y"), P(t, "x*y")});
  CHECK(verify_d2(xi));
  CHECK(xi.length() == 2);
  CHECK_THROWS_AS(build_koszul({a, Polynomial(t)}), StructuralError);
}

TEST_CASE("transposing generators conjugates by signs") {
  auto t = cotangent_varset(vars({"x", "y", "z"}));
  for (std::size_t m : {2u, 3u}) {
    std::vector<Polynomial> g = {P(t, "x*xi_y"), P(t, "xi_z + y"), P(t, "z*xi_x - x")};
    g.resize(m);
    std::vector<Polynomial> h = g;
    std::swap(h[0], h[1]);
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::swap(perm[0], perm[1]);
    auto c = build_koszul(g), c2 = build_koszul(h);
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t r = 0; r < c.ranks[k]; ++r)
        for (std::size_t col = 0; col < c.ranks[k - 1]; ++col) {
          auto [sr, wr] = relabel(c.wedge_index[k][r], perm);
          auto [sc, wc] = relabel(c.wedge_index[k - 1][col], perm);
          Polynomial e = c2.commutative[k - 1][index_in(c2, k, wr)][index_in(c2, k - 1, wc)];
          CHECK(Rational(sr * sc) * e == c.commutative[k - 1][r][col]);
        }
  }
}

TEST_CASE("commutative exactness") {
  auto r = vars({"x", "y"});
  auto t = cotangent_varset(r);
  auto reg = verify_exactness_commutative(build_koszul({P(t, "xi_x"), P(t, "xi_y")}));
  CHECK(reg.exact_at_positive_positions());
  CHECK(reg.positions[0].status == PositionVerdict::Status::d2_only);

  auto nonreg = verify_exactness_commutative(build_koszul({P(t, "x*xi_x"), P(t, "x*xi_y")}));
  CHECK_FALSE(nonreg.exact_at_positive_positions());
  REQUIRE(nonreg.positions[1].status == PositionVerdict::Status::failed);
  REQUIRE(nonreg.positions[1].witness);
  // The witness is a relation that the Koszul relation does not produce.
  const Vec& w = *nonreg.positions[1].witness;
  CHECK((w[0] * P(t, "x*xi_x") + w[1] * P(t, "x*xi_y")).is_zero());

  DivisorSpec lines(P(r, known::kThreeLines));
  DiffOperator e;
  auto theta = theta_of(lines, e);
  std::vector<Polynomial> xi;
  for (const auto& v : theta) xi.push_back(v.symbol());
  xi.push_back(lines.f().embed(t));
  CHECK(verify_exactness_commutative(build_koszul(xi)).exact_at_positive_positions());
}

TEST_CASE("syzygy route agrees with the dimension criterion") {
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  std::vector<DivisorSpec> ds = {DivisorSpec(P(r2, "x*y")), DivisorSpec(P(r2, known::kCusp)),
                                 DivisorSpec(P(r2, known::kThreeLines)), DivisorSpec(P(r3, "x*y*z")),
                                 DivisorSpec(P(r3, known::kSaitoCubic)), DivisorSpec(P(r3, known::kRectas))};
  for (const auto& d : ds) {
    CAPTURE(d.f().to_string());
    auto basis = find_saito_basis(d, true);
    REQUIRE(basis);
    std::vector<Polynomial> sym;
    for (const auto& v : *basis) sym.push_back(v.symbol());
    bool by_dim = is_regular_sequence(sym, d.n(), d.n());
    bool by_syz = verify_exactness_commutative(build_koszul(sym)).exact_at_positive_positions();
    CHECK(by_dim == by_syz);
  }
}

TEST_CASE("Spencer complexes") {
  auto r2 = vars({"x", "y"});
  DivisorSpec xy(P(r2, "x*y"));
  auto single = build_spencer(xy, {F(r2, "x*d_x - y*d_y")}, false);
  CHECK(single.ring_kind == RingKind::weyl);
  CHECK(single.length() == 1);
  CHECK(single.weyl[0][0][0] == OperatorWithS(parse_operator("x*d_x - y*d_y", r2)));

  auto xi = build_spencer(xy, {F(r2, "x*d_x - y*d_y")}, true);
  REQUIRE(xi.length() == 2);
  CHECK(xi.weyl[1][0][0] == OperatorWithS(parse_operator("-x*y", r2)));
  CHECK(xi.weyl[1][0][1] == OperatorWithS(parse_operator("x*d_x - y*d_y", r2)));
  CHECK(verify_d2(xi));
  CHECK(build_spencer(xy, {F(r2, "x*d_x - y*d_y")}, true, true).ring_kind == RingKind::weyl_with_s);

  auto r3 = vars({"x", "y", "z"});
  DivisorSpec saito(P(r3, known::kSaitoCubic));
  DiffOperator e;
  auto theta = theta_of(saito, e);
  auto sp = build_spencer(saito, theta, true);
  CHECK(sp.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(verify_d2(sp));

  // All three log fields of the Saito cubic: brackets involve every generator.
  std::vector<VectorField> all;
  for (const char* t : known::kSaitoFields) all.push_back(F(r3, t));
  auto big = build_spencer(saito, all, true);
  CHECK(big.length() == 4);
  CHECK(verify_d2(big));

  DivisorSpec rect(P(r3, known::kRectas));
  CHECK(verify_d2(build_spencer(rect, {F(r3, known::kRectasFields[0]), F(r3, known::kRectasFields[1])}, true)));

  CHECK_THROWS_AS(build_spencer(xy, {F(r2, "d_x"), F(r2, "x^2*d_y")}, false), LieClosureError);
}

TEST_CASE("corrupting any entry breaks d^2") {
  auto r3 = vars({"x", "y", "z"});
  DivisorSpec saito(P(r3, known::kSaitoCubic));
  DiffOperator e;
  auto sp = build_spencer(saito, theta_of(saito, e), true);
  REQUIRE(verify_d2(sp));
  OperatorWithS bump(parse_operator("x", r3));
  for (std::size_t k = 0; k < sp.weyl.size(); ++k)
    for (std::size_t r = 0; r < sp.weyl[k].size(); ++r)
      for (std::size_t c = 0; c < sp.weyl[k][r].size(); ++c) {
        auto bad = sp;
        bad.weyl[k][r][c] += bump;
        CHECK_FALSE(verify_d2(bad));
      }
  auto t = cotangent_varset(r3);
  auto kz = build_koszul({P(t, "xi_x"), P(t, "xi_y"), P(t, "xi_z")});
  for (std::size_t k = 0; k < kz.commutative.size(); ++k)
    for (std::size_t r = 0; r < kz.commutative[k].size(); ++r)
      for (std::size_t c = 0; c < kz.commutative[k][r].size(); ++c) {
        auto bad = kz;
        bad.commutative[k][r][c] += P(t, "1");
        CHECK_FALSE(verify_d2(bad));
      }
}

TEST_CASE("Spencer resolution checks") {
  auto r2 = vars({"x", "y"});
  DivisorSpec xy(P(r2, "x*y"));
  DiffOperator e;
  auto theta = theta_of(xy, e);
  auto a = verify_spencer_resolution(xy, theta, e, SpencerMode::theta);
  CHECK(a.d2);
  CHECK(a.augmentation);
  CHECK(a.graded_matches);
  CHECK(a.graded_exact);
  CHECK(a.certified());
  CHECK(a.summary() == "resolution certified via graded exactness");

  auto r3 = vars({"x", "y", "z"});
  DivisorSpec saito(P(r3, known::kSaitoCubic));
  auto st = theta_of(saito, e);
  auto b = verify_spencer_resolution(saito, st, e, SpencerMode::xi);
  CHECK(b.certified());
  CHECK(verify_spencer_resolution(saito, st, e, SpencerMode::theta).certified());

  DivisorSpec rect(P(r3, known::kRectas));
  std::vector<VectorField> rt = {F(r3, known::kRectasFields[0]), F(r3, known::kRectasFields[1])};
  DiffOperator re = parse_operator("1/4*x*d_x + 1/4*y*d_y", r3);
  auto c = verify_spencer_resolution(rect, rt, re, SpencerMode::theta);
  CHECK(c.d2);
  CHECK(c.augmentation);
  CHECK(c.graded_matches);
  CHECK_FALSE(c.graded_exact);
  CHECK_FALSE(c.certified());
  CHECK(c.exactness.positions[0].status == PositionVerdict::Status::failed);
  CHECK(c.exactness.positions[0].witness);
  CHECK(c.summary().find("(iv)") != std::string::npos);

  CHECK_THROWS_AS(verify_spencer_resolution(rect, {rt[0]}, re, SpencerMode::theta), InapplicableError);
  CHECK_THROWS_AS(verify_spencer_resolution(rect, {rt[0], F(r3, "d_x")}, re, SpencerMode::theta), NotLogarithmicError);
}

TEST_CASE("complex export") {
  auto t = cotangent_varset(vars({"x", "y"}));
  auto j = complex_to_json(build_koszul({P(t, "xi_x"), P(t, "xi_y")}));
  CHECK(j["ring_kind"] == "commutative");
  CHECK(j["ranks"] == nlohmann::json({1, 2, 1}));
  CHECK(j["differentials"][1][0][0] == "-xi_y");
  CHECK(j.dump() == complex_to_json(build_koszul({P(t, "xi_x"), P(t, "xi_y")})).dump());
}
