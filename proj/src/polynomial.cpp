#include "mps/polynomial.hpp"

#include <algorithm>

#include "mps/error.hpp"

namespace mps {

namespace {

void require_same_table(const RingPtr& a, const RingPtr& b) {
  if (!same_table(a, b)) {
    throw Error(ErrorKind::IncompatibleTables, "polynomials live over different variable tables");
  }
}

// Sorts descending and combines equal monomials; drops zero sums.
std::vector<Term> canonicalize(std::vector<Term> terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.less(b.monomial, a.monomial);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
      if (out.back().coefficient == 0) out.pop_back();
      continue;
    }
    if (t.coefficient != 0) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<Term> axpy(const std::vector<Term>& a, std::size_t a_from, const Rational& c,
                       const Monomial& m, const std::vector<Term>& b, std::size_t b_from,
                       const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = m * b[j].monomial;
      have_bm = true;
    }
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back(Term{std::move(bm), c * b[j].coefficient});
      have_bm = false;
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(bm), c * b[j].coefficient});
      have_bm = false;
      ++j;
    } else {
      Rational sum = a[i].coefficient + c * b[j].coefficient;
      if (sum != 0) out.push_back(Term{std::move(bm), std::move(sum)});
      have_bm = false;
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  std::vector<Term> terms;
  if (c != 0) terms.push_back(Term{Monomial(ring->nvars()), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index);
  return Polynomial(std::move(ring), {Term{std::move(m), Rational(1)}});
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  std::vector<Term> terms;
  if (c != 0) terms.push_back(Term{std::move(m), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  auto sorted = canonicalize(std::move(terms), ring->order);
  return Polynomial(std::move(ring), std::move(sorted));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::mentions(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial[index] != 0; });
}

const Polynomial& Polynomial::coerce(const Polynomial& q, Polynomial& storage) const {
  require_same_table(ring_, q.ring_);
  if (same_ring(ring_, q.ring_)) return q;
  storage = q.in_ring(ring_);
  return storage;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  Polynomial tmp(ring_);
  const Polynomial& other = coerce(q, tmp);
  return Polynomial(ring_, detail::axpy(terms_, 0, Rational(1), Monomial(ring_->nvars()),
                                        other.terms_, 0, ring_->order));
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  Polynomial tmp(ring_);
  const Polynomial& other = coerce(q, tmp);
  return Polynomial(ring_, detail::axpy(terms_, 0, Rational(-1), Monomial(ring_->nvars()),
                                        other.terms_, 0, ring_->order));
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  Polynomial tmp(ring_);
  const Polynomial& other = coerce(q, tmp);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
  }
  return Polynomial(ring_, canonicalize(std::move(products), ring_->order));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coefficient *= c;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{m * t.monomial, c * t.coefficient});
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return scaled(Rational(1) / leading_coefficient());
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  require_same_table(ring_, ring);
  if (same_ring(ring_, ring)) return Polynomial(ring, terms_);
  return Polynomial(ring, canonicalize(terms_, ring->order));
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (!same_table(ring_, q.ring_)) return false;
  if (same_ring(ring_, q.ring_)) {
    if (terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].monomial == q.terms_[i].monomial) ||
          terms_[i].coefficient != q.terms_[i].coefficient) {
        return false;
      }
    }
    return true;
  }
  return *this == q.in_ring(ring_);
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  require_same_table(p.ring(), d.ring());
  const Polynomial divisor = same_ring(p.ring(), d.ring()) ? d : d.in_ring(p.ring());
  const auto& order = p.ring()->order;
  const Term& lead = divisor.leading_term();
  std::vector<Term> remainder = p.term_vector();
  std::vector<Term> quotient;
  while (!remainder.empty()) {
    const Term& r = remainder.front();
    if (!lead.monomial.divides(r.monomial)) {
      throw Error(ErrorKind::NotDivisible, "polynomial is not divisible by the given divisor");
    }
    Term t{lead.monomial.quotient_of(r.monomial), r.coefficient / lead.coefficient};
    remainder = detail::axpy(remainder, 1, -t.coefficient, t.monomial, divisor.term_vector(), 1, order);
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_sorted_terms(p.ring(), std::move(quotient));
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images,
                      const RingPtr& target) {
  const auto& source = p.ring()->table;
  const std::size_t n = source.size();
  std::vector<std::optional<Polynomial>> image(n);
  for (const auto& [index, poly] : images) {
    if (index >= n) throw Error(ErrorKind::UnknownVariable, "substitution for an unknown variable");
    require_same_table(poly.ring(), target);
    image[index] = poly.in_ring(target);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] || !p.mentions(i)) continue;
    auto j = target->table.find(source[i]);
    if (!j) {
      throw Error(ErrorKind::UnknownVariable,
                  "variable '" + display_name(source[i], NameStyle::At) +
                      "' has no image in the target table");
    }
    image[i] = Polynomial::variable(target, *j);
  }

  // powers[i][e] = image[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, std::size_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };

  std::vector<Term> collected;
  for (const auto& t : p.terms()) {
    Polynomial acc = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < n && !acc.is_zero(); ++i) {
      if (t.monomial[i] != 0) acc = acc * power(i, t.monomial[i]);
    }
    for (const auto& s : acc.terms()) collected.push_back(s);
  }
  return Polynomial::from_terms(target, std::move(collected));
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images) {
  return substitute(p, images, p.ring());
}

Polynomial map_variables(const Polynomial& p, std::span<const std::size_t> index_map, const RingPtr& target) {
  const std::size_t n = p.ring()->nvars();
  if (index_map.size() != n) throw Error(ErrorKind::InvalidArgument, "map_variables: index map has wrong size");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial::Storage e(target->nvars(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= target->nvars()) throw Error(ErrorKind::UnknownVariable, "map_variables: target index out of range");
      e[index_map[i]] += t.monomial[i];
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.ring()->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[index];
    if (e == 0) continue;
    Monomial::Storage exps = t.monomial.exponents();
    exps[index] = e - 1;
    terms.push_back(Term{Monomial(std::move(exps)), t.coefficient * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial linear_part(const Polynomial& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() == 1) terms.push_back(t);
  }
  return Polynomial::from_sorted_terms(p.ring(), std::move(terms));
}

Rational constant_term(const Polynomial& p) {
  if (!p.is_zero() && p.terms().back().monomial.is_one()) return p.terms().back().coefficient;
  return Rational(0);
}

}  // namespace mps
