#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mps {

/// Exponent vector over a fixed variable table, with its total degree cached.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Storage = boost::container::small_vector<Exponent, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Storage exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const Storage& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws ExponentOverflow when an exponent leaves the machine-word range.
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t n) const;

  bool divides(const Monomial& other) const;
  /// Precondition: divides(other). Returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Copy with a variable removed or inserted; used when tables change.
  Monomial without(std::size_t index) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  Storage exps_;
  std::uint64_t degree_ = 0;
};

/// Total multiplicative order. Position 0 of the table is the largest variable.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  /// Elimination order: monomials are compared first on the variables marked in
  /// `eliminated` using `inner`, then on the remaining variables using `inner`.
  static MonomialOrder block(std::vector<bool> eliminated, Kind inner = Kind::DegRevLex);

  /// "lex" or "degrevlex"; throws InvalidArgument otherwise.
  static MonomialOrder from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  Kind inner() const noexcept { return inner_; }
  const std::vector<bool>& eliminated() const noexcept { return eliminated_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// The same order on a table with variable `index` removed.
  MonomialOrder without(std::size_t index) const;
  /// The same order on a table with a variable appended at the end; blocks
  /// treat the new variable as not eliminated.
  MonomialOrder appended() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind), inner_(kind) {}

  Kind kind_ = Kind::DegRevLex;
  Kind inner_ = Kind::DegRevLex;
  std::vector<bool> eliminated_;
};

}  // namespace mps
