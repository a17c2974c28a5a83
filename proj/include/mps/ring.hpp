#pragma once

#include <memory>

#include "mps/monomial.hpp"
#include "mps/variable_table.hpp"

namespace mps {

/// Polynomial ring Q[table] with the monomial order that governs term storage.
struct Ring {
  VariableTable table;
  MonomialOrder order;

  std::size_t nvars() const noexcept { return table.size(); }
  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(VariableTable table, MonomialOrder order = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring>(Ring{std::move(table), std::move(order)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }
inline bool same_table(const RingPtr& a, const RingPtr& b) {
  return a == b || a->table == b->table;
}

/// The same table under another order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->table, std::move(order));
}

}  // namespace mps
