#include "freediv/ring/weights.hpp"

#include "freediv/error.hpp"
#include "freediv/ring/linalg.hpp"

namespace freediv {

WeightedDegree weighted_degree(const Polynomial& f, const std::vector<long>& weights) {
  if (weights.size() != f.ambient().size())
    throw StructuralError("weighted_degree: need one weight per variable");
  for (long w : weights)
    if (w <= 0) throw StructuralError("weighted_degree: weights must be strictly positive");
  WeightedDegree out;
  if (f.is_zero()) {
    out.degenerate = true;
    return out;
  }
  bool first = true;
  out.homogeneous = true;
  for (const auto& [m, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * long(m[i]);
    if (first) {
      out.degree = d;
      first = false;
    } else if (d != out.degree) {
      out.homogeneous = false;
      out.degree = std::max(out.degree, d);
    }
  }
  return out;
}

namespace {

std::optional<std::vector<long>> to_coprime_integers(const linalg::Vector& v) {
  Integer den_lcm = 1;
  for (const auto& q : v) den_lcm = lcm(den_lcm, Integer(q.get_den()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (den_lcm / q.get_den());
    ints.push_back(z);
    g = gcd(g, z);
  }
  std::vector<long> out;
  for (auto& z : ints) {
    z /= g;
    if (!z.fits_slong_p() || z <= 0) return std::nullopt;
    out.push_back(z.get_si());
  }
  return out;
}

}  // namespace

std::optional<std::vector<long>> find_weights(const Polynomial& f) {
  if (f.is_zero()) throw StructuralError("find_weights: zero polynomial");
  const std::size_t n = f.ambient().size();
  if (n == 0) return std::vector<long>{};
  // <w, a_k - a_0> = 0 for every support exponent a_k.
  linalg::Matrix rows;
  auto terms = f.terms();
  const Monomial& a0 = terms[0].first;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    linalg::Vector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = long(terms[k].first[i]) - long(a0[i]);
    rows.push_back(std::move(r));
  }
  auto kernel = linalg::nullspace(rows, n);
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() == 1) {
    auto v = kernel[0];
    bool all_pos = true, all_neg = true;
    for (const auto& q : v) {
      all_pos = all_pos && q > 0;
      all_neg = all_neg && q < 0;
    }
    if (!all_pos && !all_neg) return std::nullopt;
    if (all_neg)
      for (auto& q : v) q = -q;
    return to_coprime_integers(v);
  }
  auto point = linalg::strictly_positive_kernel_point(rows, n);
  if (!point) return std::nullopt;
  return to_coprime_integers(*point);
}

}  // namespace freediv
