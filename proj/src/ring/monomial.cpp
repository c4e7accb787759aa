#include "freediv/ring/monomial.hpp"

#include <algorithm>
#include <limits>

#include "freediv/error.hpp"

namespace freediv {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw StructuralError("too many variables (limit 32)");
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) exps_[i++] = static_cast<Exponent>(e);
  recompute();
}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) exps_[i] = static_cast<Exponent>(exps[i]);
  recompute();
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw StructuralError("exponent overflow");
  exps_[i] = static_cast<Exponent>(e);
  recompute();
}

void Monomial::recompute() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& divisor) const {
  Monomial q(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw InvariantError("monomial quotient: not divisible");
    q.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  q.recompute();
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  r.recompute();
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) throw StructuralError("monomial length mismatch");
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw StructuralError("exponent overflow");
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_ || a.degree_ != b.degree_ || a.support_ != b.support_) return false;
  return std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace freediv
