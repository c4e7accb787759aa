#include "freediv/weyl/operator.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "freediv/error.hpp"
#include "freediv/ring/parse.hpp"

namespace freediv {

namespace {

std::size_t d_degree(const Monomial& m, std::size_t n) {
  std::size_t d = 0;
  for (std::size_t i = n; i < 2 * n; ++i) d += m[i];
  return d;
}

Integer falling(unsigned c, unsigned k) {
  Integer out = 1;
  for (unsigned j = 0; j < k; ++j) out *= c - j;
  return out;
}

Integer binom(unsigned b, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), b, k);
  return out;
}

// x^a d^b * x^c d^d, accumulated into `acc`:
//   d^b x^c = sum_k prod_i C(b_i, k_i) c_i!/(c_i - k_i)! x^(c-k) d^(b-k).
void multiply_terms(const Monomial& p, const Rational& cp, const Monomial& q, const Rational& cq, std::size_t n,
                    std::unordered_map<Monomial, Rational>& acc) {
  std::vector<unsigned> kmax(n), k(n, 0);
  bool trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    kmax[i] = std::min(p[n + i], q[i]);
    trivial = trivial && kmax[i] == 0;
  }
  Rational base = cp * cq;
  if (trivial) {
    acc[p * q] += base;
    return;
  }
  while (true) {
    Rational c = base;
    Monomial m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i]) c *= Rational(binom(p[n + i], k[i]) * falling(q[i], k[i]));
      m.set(i, p[i] + q[i] - k[i]);
      m.set(n + i, p[n + i] + q[n + i] - k[i]);
    }
    acc[m] += c;
    std::size_t i = 0;
    while (i < n && k[i] == kmax[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

struct OperatorBuilder {
  using Value = DiffOperator;
  const VarSet& base;

  Value constant(const Rational& c) { return DiffOperator::constant(base, c); }
  Value identifier(const Token& t) {
    if (auto idx = base.index_of(t.text)) return DiffOperator::multiplication(Polynomial::variable(base, *idx));
    if (t.text.starts_with("d_")) {
      if (auto idx = base.index_of(t.text.substr(2))) return DiffOperator::partial(base, *idx);
    }
    if (t.text == "s") throw ParseError("parameter 's' is not allowed in an s-free operator", t.line, t.column);
    throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }
  Value pow(Value a, unsigned e) {
    Value out = DiffOperator::constant(base, 1);
    while (e) {
      if (e & 1) out = out * a;
      e >>= 1;
      if (e) a = a * a;
    }
    return out;
  }
};

struct OperatorWithSBuilder {
  using Value = OperatorWithS;
  const VarSet& base;
  OperatorBuilder inner{base};

  Value constant(const Rational& c) { return inner.constant(c); }
  Value identifier(const Token& t) {
    if (t.text == "s") return OperatorWithS::s(base);
    return inner.identifier(t);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }
  Value pow(Value a, unsigned e) {
    Value out = OperatorWithS(DiffOperator::constant(base, 1));
    for (unsigned k = 0; k < e; ++k) out = out * a;
    return out;
  }
};

}  // namespace

VarSet phase_varset(const VarSet& base) {
  std::vector<std::string> names = base.names();
  std::vector<VarKind> kinds = base.kinds();
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::string d = "d_" + base.name(i);
    if (base.contains(d)) throw StructuralError("variable name '" + d + "' clashes with a derivative");
    names.push_back(d);
    kinds.push_back(VarKind::symbol);
  }
  return interned(VarSet(std::move(names), std::move(kinds)));
}

DiffOperator::DiffOperator(const VarSet& base) : base_(base), normal_(phase_varset(base)) {}

DiffOperator::DiffOperator(VarSet base, Polynomial normal) : base_(std::move(base)), normal_(std::move(normal)) {}

DiffOperator DiffOperator::multiplication(const Polynomial& g) {
  const VarSet& base = g.ambient();
  const std::size_t n = base.size();
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : g.terms()) {
    Monomial e(2 * n);
    for (std::size_t i = 0; i < n; ++i) e.set(i, m[i]);
    terms.emplace_back(e, c);
  }
  return DiffOperator(base, Polynomial::from_terms(phase_varset(base), std::move(terms)));
}

DiffOperator DiffOperator::constant(const VarSet& base, const Rational& c) {
  return DiffOperator(base, Polynomial::constant(phase_varset(base), c));
}

DiffOperator DiffOperator::partial(const VarSet& base, std::size_t var) {
  if (var >= base.size()) throw StructuralError("partial: variable index out of range");
  VarSet ph = phase_varset(base);
  return DiffOperator(base, Polynomial::variable(ph, base.size() + var));
}

DiffOperator DiffOperator::vector_field(const VarSet& base, const std::vector<Polynomial>& coeffs) {
  if (coeffs.size() != base.size()) throw StructuralError("vector_field: need one coefficient per variable");
  DiffOperator out(base);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!(coeffs[i].ambient() == base)) throw StructuralError("vector_field: coefficient in a different ring");
    out += multiplication(coeffs[i]) * partial(base, i);
  }
  return out;
}

DiffOperator DiffOperator::from_normal(const VarSet& base, const Polynomial& normal) {
  VarSet ph = phase_varset(base);
  if (!(normal.ambient() == ph)) throw StructuralError("from_normal: polynomial is not over the phase ring");
  return DiffOperator(base, normal);
}

void DiffOperator::check_same(const DiffOperator& other) const {
  if (!(base_ == other.base_)) throw StructuralError("operators over different rings");
}

int DiffOperator::order() const {
  int best = -1;
  for (const auto& [m, c] : normal_.terms()) best = std::max(best, int(d_degree(m, nvars())));
  return best;
}

bool DiffOperator::is_vector_field() const {
  for (const auto& [m, c] : normal_.terms())
    if (d_degree(m, nvars()) != 1) return false;
  return true;
}

std::vector<Polynomial> DiffOperator::vector_field_coefficients() const {
  if (!is_vector_field()) return {};
  const std::size_t n = nvars();
  std::vector<std::vector<Polynomial::Term>> parts(n);
  for (const auto& [m, c] : normal_.terms()) {
    Monomial a(n);
    std::size_t which = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, m[i]);
      if (m[n + i]) which = i;
    }
    parts[which].emplace_back(a, c);
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(base_, std::move(p)));
  return out;
}

Polynomial DiffOperator::zero_order_part() const {
  const std::size_t n = nvars();
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : normal_.terms()) {
    if (d_degree(m, n)) continue;
    Monomial a(n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, m[i]);
    terms.emplace_back(a, c);
  }
  return Polynomial::from_terms(base_, std::move(terms));
}

Polynomial DiffOperator::symbol_of_order(int k) const {
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : normal_.terms())
    if (int(d_degree(m, nvars())) == k) terms.emplace_back(m, c);
  return Polynomial::from_terms(cotangent_varset(base_), std::move(terms));
}

Polynomial DiffOperator::symbol() const {
  if (is_zero()) throw StructuralError("symbol of the zero operator");
  return symbol_of_order(order());
}

Polynomial DiffOperator::apply(const Polynomial& g) const {
  if (!(g.ambient() == base_)) throw StructuralError("apply: polynomial in a different ring");
  const std::size_t n = nvars();
  std::map<std::vector<unsigned>, Polynomial> derived;
  Polynomial out(base_);
  for (const auto& [m, c] : normal_.terms()) {
    std::vector<unsigned> b(n);
    Monomial a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, m[i]);
      b[i] = m[n + i];
    }
    auto it = derived.find(b);
    if (it == derived.end()) {
      Polynomial h = g;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < b[i]; ++k) h = h.partial(i);
      it = derived.emplace(b, std::move(h)).first;
    }
    out += it->second.mul_term(a, c);
  }
  return out;
}

DiffOperator DiffOperator::operator-() const { return DiffOperator(base_, -normal_); }

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  a.check_same(b);
  return DiffOperator(a.base_, a.normal_ + b.normal_);
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
  a.check_same(b);
  return DiffOperator(a.base_, a.normal_ - b.normal_);
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  a.check_same(b);
  std::unordered_map<Monomial, Rational> acc;
  for (const auto& [p, cp] : a.normal_.terms())
    for (const auto& [q, cq] : b.normal_.terms()) multiply_terms(p, cp, q, cq, a.nvars(), acc);
  std::vector<Polynomial::Term> terms(acc.begin(), acc.end());
  return DiffOperator(a.base_, Polynomial::from_terms(a.normal_.ambient(), std::move(terms)));
}

DiffOperator operator*(const Rational& c, const DiffOperator& a) { return DiffOperator(a.base_, c * a.normal_); }

bool operator==(const DiffOperator& a, const DiffOperator& b) {
  return a.base_ == b.base_ && a.normal_ == b.normal_;
}

std::string DiffOperator::to_string() const { return normal_.to_string(); }

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

Polynomial poisson(const Polynomial& a, const Polynomial& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("poisson: different rings");
  const VarSet& r = a.ambient();
  auto xs = r.indices_of(VarKind::base);
  auto xis = r.indices_of(VarKind::symbol);
  if (xs.size() != xis.size()) throw StructuralError("poisson: ring is not a cotangent ring");
  Polynomial out(r);
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += a.partial(xis[i]) * b.partial(xs[i]) - a.partial(xs[i]) * b.partial(xis[i]);
  return out;
}

DiffOperator parse_operator(std::string_view text, const VarSet& base) {
  OperatorBuilder b{base};
  return ExpressionParser<OperatorBuilder>(text, b).parse();
}

OperatorWithS::OperatorWithS(const VarSet& base) : base_(base) {}

OperatorWithS::OperatorWithS(const DiffOperator& p) : base_(p.base()), coeffs_{p} { trim(); }

OperatorWithS::OperatorWithS(const VarSet& base, std::vector<DiffOperator> coeffs)
    : base_(base), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.base() == base_)) throw StructuralError("OperatorWithS: coefficient over a different ring");
  trim();
}

OperatorWithS OperatorWithS::s(const VarSet& base) {
  if (base.contains("s")) throw StructuralError("'s' is reserved for the parameter and cannot be a variable");
  return OperatorWithS(base, {DiffOperator(base), DiffOperator::constant(base, 1)});
}

void OperatorWithS::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int OperatorWithS::order() const {
  int best = -1;
  for (const auto& c : coeffs_) best = std::max(best, c.order());
  return best;
}

DiffOperator OperatorWithS::s_free_part() const { return coeffs_.empty() ? DiffOperator(base_) : coeffs_[0]; }

OperatorWithS OperatorWithS::operator-() const {
  std::vector<DiffOperator> c;
  for (const auto& p : coeffs_) c.push_back(-p);
  return OperatorWithS(base_, std::move(c));
}

OperatorWithS operator+(const OperatorWithS& a, const OperatorWithS& b) {
  if (!(a.base_ == b.base_)) throw StructuralError("operators over different rings");
  std::vector<DiffOperator> c(std::max(a.coeffs_.size(), b.coeffs_.size()), DiffOperator(a.base_));
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return OperatorWithS(a.base_, std::move(c));
}

OperatorWithS operator-(const OperatorWithS& a, const OperatorWithS& b) { return a + (-b); }

OperatorWithS operator*(const OperatorWithS& a, const OperatorWithS& b) {
  if (!(a.base_ == b.base_)) throw StructuralError("operators over different rings");
  if (a.is_zero() || b.is_zero()) return OperatorWithS(a.base_);
  std::vector<DiffOperator> c(a.coeffs_.size() + b.coeffs_.size() - 1, DiffOperator(a.base_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return OperatorWithS(a.base_, std::move(c));
}

OperatorWithS operator*(const Rational& c, const OperatorWithS& a) {
  std::vector<DiffOperator> out;
  for (const auto& p : a.coeffs_) out.push_back(c * p);
  return OperatorWithS(a.base_, std::move(out));
}

bool operator==(const OperatorWithS& a, const OperatorWithS& b) {
  return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
}

std::string OperatorWithS::to_string() const {
  const std::size_t n = base_.size();
  if (coeffs_.size() <= 1) return s_free_part().to_string();
  // Render in the ring x..., s, d_x... so the parameter sits between the two halves.
  std::vector<std::string> names = base_.names();
  std::vector<VarKind> kinds = base_.kinds();
  names.push_back("s");
  kinds.push_back(VarKind::param);
  VarSet ph = phase_varset(base_);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(ph.name(n + i));
    kinds.push_back(VarKind::symbol);
  }
  VarSet ring(std::move(names), std::move(kinds));
  std::vector<Polynomial::Term> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    for (const auto& [m, c] : coeffs_[j].normal().terms()) {
      Monomial e(2 * n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        e.set(i, m[i]);
        e.set(n + 1 + i, m[n + i]);
      }
      e.set(n, unsigned(j));
      terms.emplace_back(e, c);
    }
  return Polynomial::from_terms(ring, std::move(terms)).to_string();
}

OperatorWithS parse_operator_with_s(std::string_view text, const VarSet& base) {
  if (base.contains("s")) throw StructuralError("'s' is reserved for the parameter and cannot be a variable");
  OperatorWithSBuilder b{base};
  return ExpressionParser<OperatorWithSBuilder>(text, b).parse();
}

}  // namespace freediv
