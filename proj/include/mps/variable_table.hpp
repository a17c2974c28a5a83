#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mps {

/// A ring variable. Copy index 0 is a plain germ variable; copy l >= 1 is the
/// l-th copy of `base` in a k-fold product ring (x@1, x@2, ... or x, x', x'').
struct Variable {
  std::string base;
  unsigned copy = 0;
  bool parameter = false;

  bool same_identity(const Variable& other) const {
    return base == other.base && copy == other.copy;
  }
  bool operator==(const Variable&) const = default;
};

enum class NameStyle { At, Primes };

/// Renders `x`, `x@2` (At) or `x`, `x'` (Primes). Throws PrimesOverflow
/// for copies above 3 under the primes style.
std::string display_name(const Variable& v, NameStyle style);

/// Ordered, immutable list of distinct variables. Exponent vectors index
/// positions in this order; position 0 is the largest variable in every order.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<Variable> vars);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  std::optional<std::size_t> find(const Variable& v) const;
  std::optional<std::size_t> find(std::string_view base, unsigned copy) const;

  /// Resolves a bare name to copy 0 if present,
  /// otherwise copy 1.
  std::optional<std::size_t> find_bare(std::string_view base) const;

  bool has_parameters() const;
  std::vector<std::string> names(NameStyle style) const;

  /// A name with the given prefix that does not clash with any base name.
  std::string fresh_base(std::string_view prefix) const;

  bool operator==(const VariableTable&) const = default;

 private:
  std::vector<Variable> vars_;
};

}  // namespace mps
