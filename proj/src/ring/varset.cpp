#include "freediv/ring/varset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>

#include "freediv/error.hpp"

namespace freediv {

namespace {

bool is_identifier(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

}  // namespace

VarSet::VarSet() : data_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::vector<std::string> names, std::vector<VarKind> kinds) {
  if (names.size() != kinds.size()) throw StructuralError("VarSet: names/kinds length mismatch");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw StructuralError("VarSet: invalid identifier '" + n + "'");
    if (!seen.insert(n).second) throw StructuralError("VarSet: duplicate variable '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names), std::move(kinds)});
}

VarSet VarSet::base(std::vector<std::string> names) {
  std::vector<VarKind> kinds(names.size(), VarKind::base);
  return VarSet(std::move(names), std::move(kinds));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw StructuralError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

std::vector<std::size_t> VarSet::indices_of(VarKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (data_->kinds[i] == kind) out.push_back(i);
  return out;
}

VarSet VarSet::appended(const std::vector<std::string>& names, VarKind kind) const {
  auto n = data_->names;
  auto k = data_->kinds;
  n.insert(n.end(), names.begin(), names.end());
  k.insert(k.end(), names.size(), kind);
  return VarSet(std::move(n), std::move(k));
}

VarSet VarSet::prepended(const std::vector<std::string>& names, VarKind kind) const {
  std::vector<std::string> n = names;
  std::vector<VarKind> k(names.size(), kind);
  n.insert(n.end(), data_->names.begin(), data_->names.end());
  k.insert(k.end(), data_->kinds.begin(), data_->kinds.end());
  return VarSet(std::move(n), std::move(k));
}

std::string VarSet::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  while (contains(candidate)) candidate += "_";
  return candidate;
}

bool operator==(const VarSet& a, const VarSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->kinds == b.data_->kinds;
}

VarSet interned(const VarSet& v) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::string>, std::vector<VarKind>>, VarSet> table;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = table.try_emplace({v.names(), v.kinds()}, v);
  return it->second;
}

VarSet cotangent_varset(const VarSet& base) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < base.size(); ++i) names.push_back(base.fresh_name("xi_" + base.name(i)));
  return interned(base.appended(names, VarKind::symbol));
}

}  // namespace freediv
