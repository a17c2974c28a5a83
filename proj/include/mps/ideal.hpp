#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "mps/groebner.hpp"

namespace mps {

/// Ideal of Q[table] given by generators, with a lazily computed reduced
/// Groebner basis for the ring's order. The basis is computed at most once per
/// value (and shared between copies); concurrent readers are safe.
class Ideal {
 public:
  /// Zero generators are dropped: the zero ideal has no generators.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Adopts a Groebner basis of the ideal as generators and cache.
  static Ideal from_groebner_basis(const GroebnerBasis& G);

  const RingPtr& ring() const noexcept { return ring_; }
  const VariableTable& table() const noexcept { return ring_->table; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced Groebner basis for ring().order.
  const GroebnerBasis& groebner_basis() const;

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const { return groebner_basis().is_unit_ideal(); }

  /// The same ideal with its generators re-sorted for another order.
  Ideal with_order(const MonomialOrder& order) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// ⟨gens(I) ∪ gens(J)⟩. IncompatibleTables when the tables differ.
Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// All m-fold products of generators, m >= 1.
Ideal ideal_power(const Ideal& I, unsigned m);
/// I ∩ J by eliminating w from w*I + (1-w)*J.
Ideal intersect(const Ideal& I, const Ideal& J);
/// The transporter I : J, intersecting (I ∩ ⟨g⟩)/g over the generators g of J.
/// QuotientByZeroIdeal when J = 0.
Ideal quotient(const Ideal& I, const Ideal& J);
/// I : J^∞ by iterated quotients until the chain stabilizes.
Ideal saturate(const Ideal& I, const Ideal& J);
/// I ∩ Q[table minus S]; the result's table drops S.
Ideal eliminate(const Ideal& I, std::span<const std::size_t> variables);

/// Krull dimension of Q[table]/I: the size of a largest variable set whose
/// monomials avoid every leading monomial of the reduced basis.
/// Unit ideal -> -1, zero ideal -> number of variables.
std::int64_t dimension(const Ideal& I);

bool is_member(const Polynomial& p, const Ideal& I);
/// g ∈ √I, decided by 1 ∈ I + ⟨1 - z*g⟩ with a fresh variable z.
bool radical_member(const Polynomial& g, const Ideal& I);
/// J ⊆ I.
bool contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Number of variables minus the rank of the generators' linear parts.
/// NotAGermAtOrigin when some generator has a nonzero constant term.
std::int64_t embedding_dim_at_origin(const Ideal& I);

}  // namespace mps
