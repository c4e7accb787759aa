#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace freediv {

/// Exponent vector with inline storage. The length always matches the ambient VarSet.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  /// Total degree.
  unsigned degree() const { return degree_; }
  /// Bit i is set iff variable i occurs (i < 32).
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  /// Exponentwise difference; throws InvariantError unless `divisor` divides *this.
  Monomial quotient_of(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);
  /// Plain lexicographic comparison of exponent vectors (canonical storage order, not a TermOrder).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  void recompute();

  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

}  // namespace freediv

template <>
struct std::hash<freediv::Monomial> {
  std::size_t operator()(const freediv::Monomial& m) const noexcept { return m.hash(); }
};
