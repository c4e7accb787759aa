#pragma once

#include <gmpxx.h>

#include <string>

namespace freediv {

/// Exact rational number. GMP keeps mpq_class values canonical (reduced, positive denominator)
/// as long as every constructed value goes through canonicalize(); use make_rational for that.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace freediv
