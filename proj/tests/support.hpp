#pragma once

// Test helpers: parsing shortcuts and small seeded random generators.

#include <random>
#include <string>
#include <vector>

#include "freediv/ring/parse.hpp"
#include "freediv/ring/polynomial.hpp"
#include "freediv/ring/varset.hpp"

namespace testing_support {

using namespace freediv;

inline VarSet vars(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return VarSet::base(v);
}

inline Polynomial P(const VarSet& r, const std::string& text) { return parse_polynomial(text, r); }

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    int num = integer(-5, 5);
    int den = integer(1, 3);
    return make_rational(num, den);
  }

  Polynomial polynomial(const VarSet& r, int max_terms, int max_deg) {
    std::vector<Polynomial::Term> terms;
    int count = integer(0, max_terms);
    for (int t = 0; t < count; ++t) {
      Monomial m(r.size());
      int budget = integer(0, max_deg);
      for (int k = 0; k < budget; ++k) {
        std::size_t v = std::size_t(integer(0, int(r.size()) - 1));
        m.set(v, m[v] + 1);
      }
      terms.emplace_back(m, rational());
    }
    return Polynomial::from_terms(r, std::move(terms));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
