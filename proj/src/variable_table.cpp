#include "mps/variable_table.hpp"

#include <algorithm>

#include "mps/error.hpp"

namespace mps {

std::string display_name(const Variable& v, NameStyle style) {
  if (v.copy == 0) return v.base;
  if (style == NameStyle::At) return v.base + "@" + std::to_string(v.copy);
  if (v.copy > 3) {
    throw Error(ErrorKind::PrimesOverflow,
                "copy index " + std::to_string(v.copy) + " of '" + v.base +
                    "' cannot be written with apostrophes");
  }
  return v.base + std::string(v.copy - 1, '\'');
}

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i].same_identity(vars_[j])) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate variable '" + display_name(vars_[i], NameStyle::At) + "'");
      }
    }
  }
}

std::optional<std::size_t> VariableTable::find(const Variable& v) const {
  return find(v.base, v.copy);
}

std::optional<std::size_t> VariableTable::find(std::string_view base, unsigned copy) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].base == base && vars_[i].copy == copy) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> VariableTable::find_bare(std::string_view base) const {
  if (auto i = find(base, 0)) return i;
  return find(base, 1);
}

bool VariableTable::has_parameters() const {
  return std::any_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.parameter; });
}

std::vector<std::string> VariableTable::names(NameStyle style) const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(display_name(v, style));
  return out;
}

std::string VariableTable::fresh_base(std::string_view prefix) const {
  auto taken = [this](const std::string& name) {
    return std::any_of(vars_.begin(), vars_.end(),
                       [&](const Variable& v) { return v.base == name; });
  };
  std::string name(prefix);
  for (unsigned n = 1; taken(name); ++n) name = std::string(prefix) + std::to_string(n);
  return name;
}

}  // namespace mps
