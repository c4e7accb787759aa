#include "freediv/weyl/fs_element.hpp"

#include <map>

#include "freediv/error.hpp"

namespace freediv {

VarSet fs_varset(const VarSet& base) {
  if (base.contains("s")) throw StructuralError("'s' is reserved for the parameter and cannot be a variable");
  return interned(base.appended({"s"}, VarKind::param));
}

Polynomial binomial_in_s(const VarSet& base, unsigned k) {
  VarSet r = fs_varset(base);
  Polynomial s = Polynomial::variable(r, base.size());
  Polynomial out = Polynomial::constant(r, 1);
  Integer fact = 1;
  for (unsigned j = 0; j < k; ++j) {
    out *= s - Polynomial::constant(r, j);
    fact *= j + 1;
  }
  return Rational(1, 1) / Rational(fact) * out;
}

FsElement::FsElement(Polynomial f, const Polynomial& num, unsigned m) : f_(std::move(f)), m_(m) {
  VarSet r = fs_varset(f_.ambient());
  f_in_fs_ = f_.embed(r);
  if (num.ambient() == f_.ambient())
    num_ = num.embed(r);
  else if (num.ambient() == r)
    num_ = num;
  else
    throw StructuralError("FsElement: numerator lives in an unrelated ring");
  canonicalize();
}

FsElement FsElement::fs(const Polynomial& f) { return FsElement(f, Polynomial::constant(f.ambient(), 1), 0); }

void FsElement::canonicalize() {
  if (num_.is_zero()) {
    m_ = 0;
    return;
  }
  while (m_ > 0) {
    auto q = Polynomial::divide_exact(num_, f_in_fs_);
    if (!q) break;
    num_ = std::move(*q);
    --m_;
  }
}

void FsElement::check_same(const FsElement& other) const {
  if (!(f_ == other.f_)) throw StructuralError("FsElement: different f");
}

FsElement FsElement::partial(std::size_t var) const {
  const std::size_t n = f_.ambient().size();
  if (var >= n) throw StructuralError("FsElement::partial: variable index out of range");
  const VarSet& r = num_.ambient();
  Polynomial s_minus_m = Polynomial::variable(r, n) - Polynomial::constant(r, m_);
  Polynomial next = f_in_fs_ * num_.partial(var) + s_minus_m * f_in_fs_.partial(var) * num_;
  return FsElement(f_, next, m_ + 1);
}

FsElement FsElement::times(const Polynomial& g) const {
  Polynomial h = g.ambient() == f_.ambient() ? g.embed(num_.ambient()) : g;
  return FsElement(f_, h * num_, m_);
}

FsElement operator+(const FsElement& a, const FsElement& b) {
  a.check_same(b);
  unsigned m = std::max(a.m_, b.m_);
  Polynomial num = a.num_ * a.f_in_fs_.pow(m - a.m_) + b.num_ * b.f_in_fs_.pow(m - b.m_);
  return FsElement(a.f_, num, m);
}

FsElement operator-(const FsElement& a, const FsElement& b) {
  return a + b.times(Polynomial::constant(b.f_.ambient(), -1));
}

bool operator==(const FsElement& a, const FsElement& b) {
  if (!(a.f_ == b.f_)) return false;
  return a.num_ * a.f_in_fs_.pow(b.m_) == b.num_ * b.f_in_fs_.pow(a.m_);
}

std::string FsElement::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (m_ > 0) out += "*f^-" + std::to_string(m_);
  return out + "*f^s";
}

FsElement act_on_fs(const DiffOperator& p, const FsElement& e) {
  const VarSet& base = e.f().ambient();
  if (!(p.base() == base)) throw StructuralError("act_on_fs: operator and f live in different rings");
  const std::size_t n = base.size();
  std::map<std::vector<unsigned>, FsElement> derived;
  derived.emplace(std::vector<unsigned>(n, 0), e);
  // d^b e, peeling one derivative off the first nonzero exponent.
  auto derive = [&](auto& self, const std::vector<unsigned>& b) -> const FsElement& {
    auto it = derived.find(b);
    if (it != derived.end()) return it->second;
    std::size_t i = 0;
    while (b[i] == 0) ++i;
    std::vector<unsigned> smaller = b;
    --smaller[i];
    FsElement next = self(self, smaller).partial(i);
    return derived.emplace(b, std::move(next)).first->second;
  };
  FsElement out(e.f(), Polynomial(base), 0);
  for (const auto& [m, c] : p.normal().terms()) {
    std::vector<unsigned> b(n);
    Monomial a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, m[i]);
      b[i] = m[n + i];
    }
    out = out + derive(derive, b).times(Polynomial::monomial(base, a, c));
  }
  return out;
}

FsElement act_on_fs(const OperatorWithS& p, const FsElement& e) {
  const VarSet& base = e.f().ambient();
  if (!(p.base() == base)) throw StructuralError("act_on_fs: operator and f live in different rings");
  VarSet r = fs_varset(base);
  Polynomial s = Polynomial::variable(r, base.size());
  FsElement out(e.f(), Polynomial(base), 0);
  Polynomial s_power = Polynomial::constant(r, 1);
  for (const auto& c : p.coefficients()) {
    out = out + act_on_fs(c, e).times(s_power);
    s_power *= s;
  }
  return out;
}

bool in_f_times_fs(const FsElement& e) {
  if (e.is_zero()) return true;
  if (e.pole_order() != 0) return false;
  return Polynomial::divide_exact(e.numerator(), e.f().embed(e.numerator().ambient())).has_value();
}

std::vector<Polynomial> expansion_coefficients(const DiffOperator& p, const Polynomial& f) {
  if (f.is_zero()) throw StructuralError("expansion_coefficients: f must be nonzero");
  if (p.is_zero()) return {};
  const VarSet& base = f.ambient();
  const std::size_t n = base.size();
  const unsigned d = unsigned(p.order());
  FsElement e = act_on_fs(p, FsElement::fs(f));
  if (e.pole_order() > d) throw InvariantError("expansion_coefficients: pole order exceeds operator order");
  VarSet r = fs_varset(base);
  Polynomial g = e.numerator() * f.embed(r).pow(d - e.pole_order());
  std::size_t s_idx[] = {n};
  if (g.degree_in(s_idx) > int(d)) throw InvariantError("expansion_coefficients: s-degree exceeds operator order");
  // Coordinates in the binomial basis by forward differences: A_k = sum_i (-1)^(k-i) C(k,i) g(i).
  std::vector<Polynomial> values;
  for (unsigned i = 0; i <= d; ++i)
    values.push_back(g.substitute(n, Polynomial::constant(r, i)).embed(base));
  std::vector<Polynomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial a(base);
    Integer c = 1;  // C(k, i)
    for (unsigned i = 0; i <= k; ++i) {
      Rational coeff((k - i) % 2 ? -c : c);
      a += coeff * values[i];
      c = c * (k - i) / (i + 1);
    }
    auto q = Polynomial::divide_exact(a, f.pow(d - k));
    if (!q) throw InvariantError("expansion_coefficients: coefficient not divisible by the expected power of f");
    out.push_back(std::move(*q));
  }
  return out;
}

}  // namespace freediv
