// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is exact (rational
// arithmetic, no tolerance); the only numeric bound is the runtime budget below.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "freediv/analysis/analysis.hpp"
#include "freediv/cli/runner.hpp"
#include "freediv/complexes/complexes.hpp"
#include "freediv/error.hpp"
#include "freediv/logder/logder.hpp"
#include "freediv/ring/parse.hpp"
#include "freediv/ring/weights.hpp"
#include "freediv/weyl/fs_element.hpp"
#include "known_divisors.hpp"

using namespace freediv;

namespace {

constexpr double kBudgetSeconds = 300.0;
constexpr int kRandomOperators = 60;  // at least 50 are required
constexpr unsigned kSeed = 20240917;

VarSet vars(std::vector<std::string> names) { return VarSet::base(std::move(names)); }
Polynomial P(const VarSet& r, const std::string& t) { return parse_polynomial(t, r); }
DiffOperator D(const VarSet& r, const std::string& t) { return parse_operator(t, r); }
VectorField F(const VarSet& r, const std::string& t) { return VectorField::from_operator(D(r, t)); }

// Collects failed sub-claims so the report names the first one.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  int checked() const { return checked_; }

 private:
  std::string failure_;
  int checked_ = 0;
};

std::vector<DivisorSpec> corpus_divisors() {
  auto r1 = vars({"x"});
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  return {DivisorSpec(P(r1, "x")),          DivisorSpec(P(r2, "x*y")),
          DivisorSpec(P(r3, "x*y*z")),      DivisorSpec(P(r2, known::kCusp)),
          DivisorSpec(P(r2, known::kThreeLines)), DivisorSpec(P(r2, known::kNonLctCurve)),
          DivisorSpec(P(r3, known::kSaitoCubic)), DivisorSpec(P(r3, known::kRectas)),
          DivisorSpec(P(r3, known::kQuadricCone)), DivisorSpec(P(r2, "x"))};
}

void ac1(Criterion& c) {
  auto r = vars({"x", "y", "z"});
  DivisorSpec d(P(r, known::kRectas));
  std::vector<VectorField> b = {F(r, known::kRectasFields[0]), F(r, known::kRectasFields[1]),
                                F(r, known::kRectasFields[2])};
  c.require(b[0].apply(d.f()).is_zero(), "delta_1(f) = 0");
  c.require(b[1].apply(d.f()).is_zero(), "delta_2(f) = 0");
  c.require(b[2].apply(d.f()) == Rational(4) * d.f(), "delta_3(f) = 4f");
  auto s = saito_criterion(d, b);
  c.require(s.determinant == Rational(-16) * d.f(), "det = -16 f");
  c.require(s.is_basis, "Saito criterion passes");
  auto k = koszul_check(d, b);
  c.require(k.dim == 4, "symbol ideal dimension 4");
  c.require(!k.is_koszul_free, "not Koszul free");
}

void ac2(Criterion& c) {
  auto r = vars({"x", "y", "z"});
  auto t = cotangent_varset(r);
  DivisorSpec d(P(r, known::kRectas));
  OperatorWithS p(D(r, known::kRectasP));
  c.require(act_on_fs(p, FsElement::fs(d.f())).is_zero(), "P f^s = 0");
  std::vector<VectorField> theta = {F(r, known::kRectasFields[0]), F(r, known::kRectasFields[1])};
  auto w = linear_type_witness_check(d, p, theta);
  auto gb = w.colon_ideal.ideal_basis();
  c.require(gb.size() == 2 && gb[0] == P(t, "x") && gb[1] == P(t, "y"), "colon ideal has reduced GB {x, y}");
  c.require(w.in_ann && !w.in_theta_ideal, "witness check returns (true, <x,y>, false)");
}

void ac3(Criterion& c) {
  auto r = vars({"x", "y", "z"});
  DivisorSpec d(P(r, known::kSaitoCubic));
  std::vector<VectorField> b;
  for (const char* s : known::kSaitoFields) b.push_back(F(r, s));
  for (const auto& v : b) c.require(is_logarithmic(d, v), "field " + v.to_string() + " logarithmic");
  auto s = saito_criterion(d, b);
  c.require(s.is_basis && s.det_scalar && *s.det_scalar != 0, "det = c f with c != 0");
  auto k = koszul_check(d, b);
  c.require(k.dim == 3 && k.is_koszul_free, "dimension 3, Koszul free");
  c.require(find_weights(d.f()) == std::vector<long>{2, 3, 4}, "weights (2,3,4)");
  c.require(rees_kernel(d).is_linear_type, "linear type");
}

void ac4(Criterion& c) {
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  for (const auto& d : {DivisorSpec(P(r2, known::kCusp)), DivisorSpec(P(r3, known::kQuadricCone))}) {
    const std::string name = d.f().to_string();
    c.require(isolated_singularity_kernel_check(d), name + ": kernel = cross terms");
    auto kernel = rees_kernel(d).kernel;
    SubmoduleGB cross = SubmoduleGB::ideal(kernel.ring(), cross_terms(d));
    c.require(kernel.contains_all(cross), name + ": cross terms inside the kernel");
    c.require(cross.contains_all(kernel), name + ": kernel inside the cross terms");
  }
}

void ac5(Criterion& c) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::string> names;
    std::string f;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("x" + std::to_string(i + 1));
      f += (i ? "*" : "") + names.back();
    }
    auto r = vars(names);
    DivisorSpec d(P(r, f));
    const std::string tag = f + ": ";
    auto theta = compute_theta(d);
    c.require(theta.generators.size() == k - 1, tag + "Theta_f has k-1 generators");
    auto basis = find_saito_basis(d);
    c.require(basis.has_value(), tag + "Saito basis found");
    if (!basis) continue;
    c.require(koszul_check(d, *basis).is_koszul_free, tag + "Koszul free");
    c.require(rees_kernel(d).is_linear_type, tag + "linear type");
    auto e = find_euler(d);
    c.require(e.has_value(), tag + "Euler field");
    if (!e) continue;
    auto tb = split_logder(d, *basis, *e);
    for (auto mode : {SpencerMode::theta, SpencerMode::xi}) {
      auto rep = verify_spencer_resolution(d, tb, *e, mode);
      std::string m = mode == SpencerMode::theta ? "Theta_f " : "Xi_f ";
      c.require(rep.d2, tag + m + "d^2 = 0");
      c.require(rep.augmentation, tag + m + "augmentation");
      c.require(rep.graded_matches, tag + m + "graded complex = Koszul complex");
      c.require(rep.graded_exact, tag + m + "Koszul complex exact");
    }
  }
}

DiffOperator random_operator(std::mt19937& rng, const VarSet& base, int max_order) {
  std::uniform_int_distribution<int> terms(1, 3), ord(0, max_order), xdeg(0, 1), num(-5, 5), den(1, 3);
  std::uniform_int_distribution<std::size_t> var(0, base.size() - 1);
  const std::size_t n = base.size();
  std::vector<Polynomial::Term> ts;
  for (int t = terms(rng); t > 0; --t) {
    Monomial m(2 * n);
    for (int k = ord(rng); k > 0; --k) {
      std::size_t v = n + var(rng);
      m.set(v, m[v] + 1);
    }
    for (int k = xdeg(rng); k > 0; --k) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    ts.emplace_back(m, make_rational(num(rng), den(rng)));
  }
  return DiffOperator::from_normal(base, Polynomial::from_terms(phase_varset(base), std::move(ts)));
}

void ac6(Criterion& c) {
  auto corpus = corpus_divisors();
  // Dimension route against syzygy route.
  for (const auto& d : corpus) {
    auto basis = find_saito_basis(d, true);
    std::vector<std::vector<Polynomial>> seqs;
    if (basis) {
      std::vector<Polynomial> sym;
      for (const auto& v : *basis) sym.push_back(v.symbol());
      seqs.push_back(sym);
    }
    std::vector<Polynomial> grad;
    VarSet cot = cotangent_varset(d.ring());
    for (const auto& v : compute_theta(d).generators) grad.push_back(v.symbol());
    grad.push_back(d.f().embed(cot));
    seqs.push_back(grad);
    for (const auto& seq : seqs) {
      bool by_dim = is_regular_sequence(seq, d.n(), d.n());
      bool by_syz = verify_exactness_commutative(build_koszul(seq, cot)).exact_at_positive_positions();
      c.require(by_dim == by_syz, d.f().to_string() + ": dimension and syzygy routes agree");
    }
  }

  // Top coefficient of the expansion: substitution against iterated brackets.
  std::mt19937 rng(kSeed);
  auto r2 = vars({"x", "y"});
  auto r3 = vars({"x", "y", "z"});
  std::vector<Polynomial> fs = {P(r2, known::kCusp), P(r2, known::kThreeLines), P(r3, known::kRectas),
                                P(r3, known::kSaitoCubic)};
  int tested = 0;
  for (int trial = 0; tested < kRandomOperators && trial < 10 * kRandomOperators; ++trial) {
    const Polynomial& f = fs[std::size_t(trial) % fs.size()];
    auto p = random_operator(rng, f.ambient(), 3);
    if (p.is_zero()) continue;
    ++tested;
    auto coeffs = expansion_coefficients(p, f);
    const VarSet& base = f.ambient();
    std::vector<Polynomial> values;
    for (std::size_t i = 0; i < base.size(); ++i) values.push_back(Polynomial::variable(base, i));
    for (std::size_t i = 0; i < base.size(); ++i) values.push_back(f.partial(i));
    Integer fact = 1;
    for (int k = 2; k <= p.order(); ++k) fact *= k;
    Polynomial subst = Rational(fact) * p.symbol().substitute_all(values, base);
    Polynomial br = p.symbol();
    Polynomial fe = f.embed(br.ambient());
    for (int k = 0; k < p.order(); ++k) br = poisson(br, fe);
    c.require(coeffs.back() == subst && subst == br.embed(base), "top coefficient identity on " + p.to_string());
  }
  c.require(tested >= 50, "at least 50 random operators");

  // Adding a variable: Theta gains d/dt, the Rees kernel gains its symbol.
  for (const auto& d : corpus) {
    c.require(variable_extension_check(d.f()), d.f().to_string() + ": Theta extension");
    VarSet big = d.ring().appended({d.ring().fresh_name("t")}, VarKind::base);
    auto small_kernel = rees_kernel(d).kernel;
    auto big_kernel = rees_kernel(DivisorSpec(d.f().embed(big))).kernel;
    VarSet big_cot = big_kernel.ring();
    std::vector<Polynomial> gens;
    for (const auto& k : small_kernel.ideal_basis()) gens.push_back(k.embed(big_cot));
    gens.push_back(Polynomial::variable(big_cot, big_cot.size() - 1));
    c.require(SubmoduleGB::ideal(big_cot, gens).same_as(big_kernel), d.f().to_string() + ": Rees kernel extension");
  }

  // Products of Koszul free divisors in disjoint variables.
  auto ruv = vars({"u", "v"});
  auto rw = vars({"w"});
  std::vector<std::pair<Polynomial, Polynomial>> products = {
      {P(r2, "x*y"), P(rw, "w")},
      {P(r2, known::kCusp), P(rw, "w")},
      {P(r2, known::kCusp), P(ruv, "u*v*(u+v)")},
      {P(r3, known::kSaitoCubic), P(rw, "w")},
  };
  for (const auto& [f, g] : products) {
    auto rep = product_stability_report(f, g);
    c.require(rep.holds && rep.product_koszul && rep.dummy_koszul,
              f.to_string() + " times " + g.to_string() + ": Koszul free product");
  }
}

void ac7(Criterion& c) {
  auto r = vars({"x", "y", "z"});
  DivisorSpec d(P(r, known::kSaitoCubic));
  auto basis = find_saito_basis(d);
  auto e = find_euler(d);
  c.require(basis && e, "Saito cubic basis and Euler field");
  if (!basis || !e) return;
  auto sp = build_spencer(d, split_logder(d, *basis, *e), true);
  c.require(verify_d2(sp), "uncorrupted Spencer complex has d^2 = 0");
  OperatorWithS bump(D(r, "1"));
  for (std::size_t k = 0; k < sp.weyl.size(); ++k)
    for (std::size_t i = 0; i < sp.weyl[k].size(); ++i)
      for (std::size_t j = 0; j < sp.weyl[k][i].size(); ++j) {
        auto bad = sp;
        bad.weyl[k][i][j] += bump;
        c.require(!verify_d2(bad), "corrupted entry detected");
      }

  auto r2 = vars({"x", "y"});
  bool rejected = false;
  try {
    DivisorSpec bad(P(r2, "x^2*y"));
  } catch (const SquarefreeError&) {
    rejected = true;
  }
  c.require(rejected, "x^2*y rejected by the divisor constructor");
  cli::AnalysisRequest req;
  req.vars = {"x", "y"};
  req.f = "x^2*y";
  rejected = false;
  try {
    cli::run(req);
  } catch (const SquarefreeError&) {
    rejected = true;
  }
  c.require(rejected, "x^2*y rejected before analysis");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"AC1 four-planes basis, determinant and Koszul verdict", ac1},
      {"AC2 annihilating operator and colon ideal", ac2},
      {"AC3 Saito cubic", ac3},
      {"AC4 isolated singularity kernels", ac4},
      {"AC5 normal crossings", ac5},
      {"AC6 property suite", ac6},
      {"AC7 negative controls", ac7},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Criterion c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (c.passed()) {
      std::cout << "PASS " << name << " (" << c.checked() << " checks)\n";
    } else {
      ++failed;
      std::cout << "FAIL " << name << ": " << c.failure() << "\n";
    }
  }
  double seconds = std::chrono::duration<double>(clock::now() - start).count();
  bool in_budget = seconds <= kBudgetSeconds;
  std::cout << (in_budget ? "PASS" : "FAIL") << " runtime within " << kBudgetSeconds << " s\n";
  return failed == 0 && in_budget ? 0 : 1;
}
