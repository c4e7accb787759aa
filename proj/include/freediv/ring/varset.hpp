#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freediv {

enum class VarKind { base, symbol, rees, param };

/// Ordered list of distinct variable names. Declaration order is the canonical variable order.
/// Cheap to copy (shared immutable storage); equality compares contents.
class VarSet {
 public:
  VarSet();
  VarSet(std::vector<std::string> names, std::vector<VarKind> kinds);
  /// All variables of kind base.
  static VarSet base(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  VarKind kind(std::size_t i) const { return data_->kinds[i]; }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::vector<VarKind>& kinds() const { return data_->kinds; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws StructuralError for an unknown name.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Indices of every variable of the given kind, in declaration order.
  std::vector<std::size_t> indices_of(VarKind kind) const;

  /// New set with extra variables appended.
  VarSet appended(const std::vector<std::string>& names, VarKind kind) const;
  /// New set with extra variables prepended.
  VarSet prepended(const std::vector<std::string>& names, VarKind kind) const;

  /// A name derived from `stem` that does not clash with any variable here.
  std::string fresh_name(std::string_view stem) const;

  friend bool operator==(const VarSet& a, const VarSet& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
  };
  std::shared_ptr<const Data> data_;
};

/// Canonical shared instance equal to `v`, so derived rings built repeatedly compare by pointer.
VarSet interned(const VarSet& v);

/// Base variables x..., then their symbols xi_x... (kind symbol).
VarSet cotangent_varset(const VarSet& base);

}  // namespace freediv
