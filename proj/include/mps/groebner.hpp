#pragma once

#include <span>
#include <vector>

#include "mps/polynomial.hpp"

namespace mps {

/// A Groebner basis for the order of `ring`. When `reduced` is set the
/// generators are monic, no monomial of one generator is divisible by the
/// leading monomial of another, and they are sorted ascending by leading
/// monomial; this form is unique for the ideal and order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
  bool reduced = false;

  const MonomialOrder& order() const { return ring->order; }
  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const;
};

/// Remainder of full division of p by G in G's stored order: the order-largest
/// reducible monomial is always reduced next, by the first G element whose
/// leading monomial divides it. Uses p's ring order; G is coerced to it.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// coprime-leading-monomial and chain criteria. Pairs are selected by the
/// normal strategy: smallest lcm degree, ties broken by the monomial order on
/// the lcm and then by generator indices. Zero inputs are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const RingPtr& ring);

/// The unique reduced basis of the ideal spanned by a Groebner basis.
GroebnerBasis reduce_basis(const GroebnerBasis& G);

/// reduce_basis(buchberger(generators, ring)).
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const RingPtr& ring);

/// p reduces to zero modulo a Groebner basis.
bool reduces_to_zero(const Polynomial& p, const GroebnerBasis& G);

}  // namespace mps
