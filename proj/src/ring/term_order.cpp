#include "freediv/ring/term_order.hpp"

#include "freediv/error.hpp"

namespace freediv {

namespace {

void check_size(std::size_t n) {
  if (n > Monomial::kMaxVars) throw StructuralError("term order: too many variables");
}

}  // namespace

TermOrder TermOrder::lex(std::size_t nvars) {
  check_size(nvars);
  TermOrder o;
  o.kind_ = Kind::lex;
  o.nvars_ = nvars;
  for (std::size_t i = 0; i < nvars; ++i) o.rows_.push_back(Row{{{std::uint32_t(i), 1}}, false});
  o.description_ = "lex";
  return o;
}

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  check_size(nvars);
  TermOrder o;
  o.kind_ = Kind::degrevlex;
  o.nvars_ = nvars;
  if (nvars > 0) {
    Row total;
    for (std::size_t i = 0; i < nvars; ++i) total.entries.push_back({std::uint32_t(i), 1});
    total.all_ones = true;
    o.rows_.push_back(std::move(total));
    for (std::size_t i = nvars; i-- > 1;) o.rows_.push_back(Row{{{std::uint32_t(i), -1}}, false});
  }
  o.description_ = "degrevlex";
  return o;
}

TermOrder TermOrder::weighted(std::vector<long> weights) {
  for (long w : weights)
    if (w <= 0) throw StructuralError("weighted order: weights must be strictly positive");
  TermOrder o = degrevlex(weights.size());
  o.kind_ = Kind::weighted;
  Row wrow;
  for (std::size_t i = 0; i < weights.size(); ++i) wrow.entries.push_back({std::uint32_t(i), weights[i]});
  o.rows_.insert(o.rows_.begin(), std::move(wrow));
  o.description_ = "weighted";
  return o;
}

TermOrder TermOrder::block(std::vector<bool> first, const TermOrder& inner1, const TermOrder& inner2) {
  if (first.size() != inner1.nvars_ || first.size() != inner2.nvars_)
    throw StructuralError("block order: size mismatch");
  std::vector<bool> rest(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) rest[i] = !first[i];
  TermOrder o;
  o.kind_ = Kind::block;
  o.nvars_ = first.size();
  o.rows_ = inner1.masked_rows(first);
  auto tail = inner2.masked_rows(rest);
  o.rows_.insert(o.rows_.end(), tail.begin(), tail.end());
  o.description_ = "block(" + inner1.description_ + "|" + inner2.description_ + ")";
  return o;
}

TermOrder TermOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated) {
  std::vector<bool> mask(nvars, false);
  for (auto v : eliminated) {
    if (v >= nvars) throw StructuralError("elimination order: variable index out of range");
    mask[v] = true;
  }
  return block(mask, degrevlex(nvars), degrevlex(nvars));
}

std::vector<TermOrder::Row> TermOrder::masked_rows(const std::vector<bool>& keep) const {
  std::vector<Row> out;
  for (const auto& r : rows_) {
    Row m;
    for (auto [v, w] : r.entries)
      if (keep[v]) m.entries.push_back({v, w});
    if (!m.entries.empty()) out.push_back(std::move(m));
  }
  return out;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& r : rows_) {
    long d = 0;
    if (r.all_ones) {
      d = long(a.degree()) - long(b.degree());
    } else {
      for (auto [v, w] : r.entries) d += w * (long(a[v]) - long(b[v]));
    }
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

std::string TermOrder::describe() const { return description_; }

}  // namespace freediv
