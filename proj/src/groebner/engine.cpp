#include "engine.hpp"

#include <algorithm>

#include "freediv/error.hpp"

namespace freediv::detail {

namespace {

// h[start+1..] - c * m * g[1..]; the leading terms are known to cancel.
GPoly sub_mul_tail(const GPoly& h, std::size_t start, const Rational& c, const Monomial& m, const GPoly& g,
                   const Ordering& ord) {
  GPoly out;
  out.reserve(h.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  if (j < g.size()) {
    Monomial mg = g[j].mon * m;
    while (i < h.size()) {
      int cmp = ord.compare(h[i].mon, h[i].comp, mg, g[j].comp);
      if (cmp > 0) {
        out.push_back(h[i++]);
        continue;
      }
      if (cmp < 0) {
        out.push_back(GTerm{mg, g[j].comp, -c * g[j].coeff});
      } else {
        Rational v = h[i].coeff - c * g[j].coeff;
        if (v != 0) out.push_back(GTerm{h[i].mon, h[i].comp, std::move(v)});
        ++i;
      }
      if (++j == g.size()) break;
      mg = g[j].mon * m;
    }
    for (; j < g.size(); ++j) out.push_back(GTerm{g[j].mon * m, g[j].comp, -c * g[j].coeff});
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  return out;
}

GPoly shifted(const GPoly& a, const Monomial& m) {
  GPoly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(GTerm{t.mon * m, t.comp, t.coeff});
  return out;
}

// Leading coefficients are 1.
GPoly spoly(const GPoly& a, const GPoly& b, const Monomial& lcm, const Ordering& ord) {
  GPoly sa = shifted(a, lcm.quotient_of(a[0].mon));
  return sub_mul_tail(sa, 0, Rational(1), lcm.quotient_of(b[0].mon), b, ord);
}

long find_divisor(const GTerm& t, const std::vector<GPoly>& basis, const std::vector<char>* active) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active && !(*active)[k]) continue;
    const auto& lead = basis[k][0];
    if (lead.comp == t.comp && lead.mon.divides(t.mon)) return long(k);
  }
  return -1;
}

GPoly reduce_impl(const GPoly& f, const std::vector<GPoly>& basis, const std::vector<char>* active,
                  const Ordering& ord, std::vector<GPoly>* quotients) {
  GPoly rem;
  GPoly h = f;
  std::size_t start = 0;
  while (start < h.size()) {
    const GTerm& lt = h[start];
    long k = find_divisor(lt, basis, active);
    if (k < 0) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const GPoly& g = basis[std::size_t(k)];
    Rational c = lt.coeff / g[0].coeff;
    Monomial m = lt.mon.quotient_of(g[0].mon);
    if (quotients) (*quotients)[std::size_t(k)].push_back(GTerm{m, 0, c});
    h = sub_mul_tail(h, start, c, m, g, ord);
    start = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

}  // namespace

GPoly to_gpoly(const std::vector<Polynomial>& v, const Ordering& ord) {
  GPoly g;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const auto& [m, coeff] : v[c].terms()) g.push_back(GTerm{m, std::uint32_t(c), coeff});
  std::sort(g.begin(), g.end(), [&](const GTerm& a, const GTerm& b) { return ord.compare(a, b) > 0; });
  return g;
}

std::vector<Polynomial> from_gpoly(const GPoly& g, const VarSet& ring, std::size_t rank) {
  std::vector<std::vector<Polynomial::Term>> parts(rank);
  for (const auto& t : g) {
    if (t.comp >= rank) throw InvariantError("module component out of range");
    parts[t.comp].emplace_back(t.mon, t.coeff);
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

void make_monic(GPoly& g) {
  if (g.empty() || g[0].coeff == 1) return;
  Rational inv = 1 / g[0].coeff;
  for (auto& t : g) t.coeff *= inv;
}

GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis, const Ordering& ord,
                  std::vector<GPoly>* quotients) {
  if (quotients) quotients->assign(basis.size(), GPoly{});
  return reduce_impl(f, basis, nullptr, ord, quotients);
}

std::vector<GPoly> buchberger(std::vector<GPoly> input, const Ordering& ord, bool is_ideal) {
  std::vector<GPoly> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto update = [&](GPoly h_poly) {
    make_monic(h_poly);
    const std::size_t h = polys.size();
    polys.push_back(std::move(h_poly));
    active.push_back(0);
    const GTerm& lh = polys[h][0];

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g] || polys[g][0].comp != lh.comp) continue;
      candidates.push_back(Pair{g, h, polys[g][0].mon.lcm(lh.mon), lh.comp});
    }
    std::vector<Pair> kept;
    std::vector<char> coprime_flag;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool coprime = is_ideal && polys[p.i][0].mon.coprime(lh.mon);
      bool keep = true;
      if (!coprime) {
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
          if (candidates[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (kept[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) {
        kept.push_back(p);
        coprime_flag.push_back(coprime);
      }
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      if (p.comp == lh.comp && lh.mon.divides(p.lcm) && !(polys[p.i][0].mon.lcm(lh.mon) == p.lcm) &&
          !(polys[p.j][0].mon.lcm(lh.mon) == p.lcm))
        continue;
      next.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (!coprime_flag[k]) next.push_back(std::move(kept[k]));
    pairs = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && polys[g][0].comp == lh.comp && lh.mon.divides(polys[g][0].mon)) active[g] = 0;
    active[h] = 1;
  };

  for (auto& f : input)
    if (!f.empty()) update(std::move(f));

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.lcm.degree() != b.lcm.degree() ? a.lcm.degree() < b.lcm.degree()
                                           : (a.j != b.j ? a.j < b.j : a.i < b.i))
        best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + long(best));
    GPoly s = spoly(polys[p.i], polys[p.j], p.lcm, ord);
    GPoly h = reduce_impl(s, polys, &active, ord, nullptr);
    if (!h.empty()) update(std::move(h));
  }

  std::vector<GPoly> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(std::move(polys[k]));
  std::sort(basis.begin(), basis.end(), [&](const GPoly& a, const GPoly& b) { return ord.compare(a[0], b[0]) > 0; });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    GPoly tail(basis[k].begin() + 1, basis[k].end());
    GPoly reduced = reduce_impl(tail, basis, nullptr, ord, nullptr);
    GPoly g;
    g.reserve(reduced.size() + 1);
    g.push_back(basis[k][0]);
    g.insert(g.end(), reduced.begin(), reduced.end());
    basis[k] = std::move(g);
  }
  return basis;
}

bool spairs_reduce_to_zero(const std::vector<GPoly>& basis, const Ordering& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i][0].comp != basis[j][0].comp) continue;
      Monomial l = basis[i][0].mon.lcm(basis[j][0].mon);
      GPoly a = basis[i], b = basis[j];
      make_monic(a);
      make_monic(b);
      if (!reduce_impl(spoly(a, b, l, ord), basis, nullptr, ord, nullptr).empty()) return false;
    }
  return true;
}

}  // namespace freediv::detail
