#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mps/rational.hpp"
#include "mps/ring.hpp"

namespace mps {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Exact multivariate polynomial over Q. Terms are stored with nonzero
/// coefficients, distinct monomials, in descending order of the ring's order.
/// Values are immutable; every operation returns a new polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts the caller: terms already canonical for `ring`.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  const std::vector<Term>& term_vector() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Preconditions: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  std::uint64_t total_degree() const noexcept;
  /// True when some term contains the variable at `index`.
  bool mentions(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial pow(std::uint64_t n) const;

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const;

  /// Same polynomial re-sorted for another order on the same table.
  Polynomial in_ring(const RingPtr& ring) const;

  /// Same table and same terms (orders may differ).
  bool operator==(const Polynomial& q) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  /// q converted into this ring, or IncompatibleTables.
  const Polynomial& coerce(const Polynomial& q, Polynomial& storage) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// ring_ops(add, sub, mul, neg, pow) are the member operators above.

/// Returns q with p = q*d. Throws DivisionByZero for d = 0 and NotDivisible
/// when d does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// Simultaneous substitution of variable positions (of p's table) by images over
/// `target`. Variables without an image map to the variable of the same identity
/// in `target`; a used variable without image or counterpart is UnknownVariable.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images,
                      const RingPtr& target);
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images);

/// Moves p into `target` sending variable i of p's table to variable
/// index_map[i] of `target` (an injection between tables).
Polynomial map_variables(const Polynomial& p, std::span<const std::size_t> index_map, const RingPtr& target);

/// Formal partial derivative; UnknownVariable for an out-of-range index.
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Degree-one homogeneous component.
Polynomial linear_part(const Polynomial& p);
Rational constant_term(const Polynomial& p);

namespace detail {

/// a[a_from..] + c * m * b[b_from..], merged in descending order.
std::vector<Term> axpy(const std::vector<Term>& a, std::size_t a_from, const Rational& c,
                       const Monomial& m, const std::vector<Term>& b, std::size_t b_from,
                       const MonomialOrder& order);

}  // namespace detail

}  // namespace mps
