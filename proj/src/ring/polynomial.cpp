#include "freediv/ring/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "freediv/error.hpp"

namespace freediv {

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first < b.first; }

// Descending-by-order merge of a and (c*m*b); both inputs sorted descending by `order`.
std::vector<Polynomial::Term> sub_scaled(const std::vector<Polynomial::Term>& a, const Rational& c,
                                         const Monomial& m, const std::vector<Polynomial::Term>& b,
                                         const TermOrder& order) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].first * m;
    int cmp = i == a.size() ? -1 : order.compare(a[i].first, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(mb, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(VarSet ambient) : ambient_(std::move(ambient)) {}

Polynomial Polynomial::constant(const VarSet& ambient, const Rational& c) {
  Polynomial p(ambient);
  if (c != 0) p.terms_.emplace_back(Monomial(ambient.size()), c);
  return p;
}

Polynomial Polynomial::variable(const VarSet& ambient, std::size_t var) {
  if (var >= ambient.size()) throw StructuralError("variable index out of range");
  return monomial(ambient, Monomial::unit(ambient.size(), var));
}

Polynomial Polynomial::variable(const VarSet& ambient, std::string_view name) {
  return variable(ambient, ambient.require(name));
}

Polynomial Polynomial::monomial(const VarSet& ambient, const Monomial& m, const Rational& c) {
  if (m.size() != ambient.size()) throw StructuralError("monomial length does not match ambient");
  Polynomial p(ambient);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(const VarSet& ambient, std::vector<Term> terms) {
  Polynomial p(ambient);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (t.first.size() != ambient.size()) throw StructuralError("monomial length does not match ambient");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Polynomial::constant_term() const { return coefficient(Monomial(ambient_.size())); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.first.degree()));
  return d;
}

int Polynomial::degree_in(std::span<const std::size_t> vars) const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : vars) s += int(t.first[v]);
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.first[var] != 0) return true;
  return false;
}

const Polynomial::Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.first, best->first)) best = &t;
  return *best;
}

void Polynomial::check_same(const Polynomial& other) const {
  if (!(ambient_ == other.ambient_)) throw StructuralError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.ambient_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = a.terms_[i].first <=> b.terms_[j].first;
    if (c < 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c > 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational v = a.terms_[i].second + b.terms_[j].second;
      if (v != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), a.terms_.begin() + i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + j, b.terms_.end());
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ambient_);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[ta.first * tb.first] += ta.second * tb.second;
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial r(a.ambient_);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return Polynomial(a.ambient_);
  Polynomial r = a;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ambient_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying every monomial by m preserves the lexicographic storage order.
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ambient_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ambient_ == b.ambient_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= ambient_.size()) throw StructuralError("partial: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.first[var];
    if (e == 0) continue;
    Monomial m = t.first;
    m.set(var, e - 1);
    out.emplace_back(m, t.second * e);
  }
  return from_terms(ambient_, std::move(out));
}

Polynomial Polynomial::partial(std::string_view name) const { return partial(ambient_.require(name)); }

Polynomial Polynomial::embed(const VarSet& target) const {
  if (ambient_ == target) return *this;
  std::vector<std::optional<std::size_t>> map(ambient_.size());
  for (std::size_t i = 0; i < ambient_.size(); ++i) map[i] = target.index_of(ambient_.name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
      if (t.first[i] == 0) continue;
      if (!map[i]) throw StructuralError("embed: variable '" + ambient_.name(i) + "' missing from target ring");
      m.set(*map[i], t.first[i]);
    }
    out.emplace_back(m, t.second);
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::reinterpret(const VarSet& target) const {
  if (target.size() != ambient_.size()) throw StructuralError("reinterpret: ring sizes differ");
  Polynomial r(target);
  r.terms_ = terms_;
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_same(value);
  auto coeffs = coefficients_in(var);
  Polynomial r(ambient_);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
  return r;
}

Polynomial Polynomial::substitute_all(std::span<const Polynomial> values, const VarSet& target) const {
  if (values.size() != ambient_.size()) throw StructuralError("substitute_all: wrong number of values");
  std::vector<std::vector<Polynomial>> powers(ambient_.size());
  Polynomial r(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.second);
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
      unsigned e = t.first[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
      term = term * pw[e];
    }
    r += term;
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    unsigned e = t.first[var];
    if (buckets.size() <= e) buckets.resize(e + 1);
    Monomial m = t.first;
    m.set(var, 0);
    buckets[e].emplace_back(m, t.second);
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(from_terms(ambient_, std::move(b)));
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  if (b.is_zero()) throw StructuralError("division by the zero polynomial");
  TermOrder order = TermOrder::degrevlex(a.ambient_.size());
  auto by_order = [&](const Term& x, const Term& y) { return order.greater(x.first, y.first); };
  std::vector<Term> rem(a.terms_.begin(), a.terms_.end());
  std::vector<Term> div(b.terms_.begin(), b.terms_.end());
  std::sort(rem.begin(), rem.end(), by_order);
  std::sort(div.begin(), div.end(), by_order);
  const Monomial& lm = div[0].first;
  const Rational& lc = div[0].second;
  std::vector<Term> quot;
  while (!rem.empty()) {
    if (!lm.divides(rem[0].first)) return std::nullopt;
    Monomial m = rem[0].first.quotient_of(lm);
    Rational c = rem[0].second / lc;
    quot.emplace_back(m, c);
    rem = sub_scaled(rem, c, m, div, order);
  }
  return from_terms(a.ambient_, std::move(quot));
}

std::string monomial_to_string(const VarSet& ambient, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ambient.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const { return to_string(TermOrder::degrevlex(ambient_.size())); }

std::string Polynomial::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* x, const Term* y) { return order.greater(x->first, y->first); });
  std::string s;
  bool first = true;
  for (const Term* t : sorted) {
    Rational c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t->first.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += monomial_to_string(ambient_, t->first);
    }
  }
  return s;
}

std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace freediv
