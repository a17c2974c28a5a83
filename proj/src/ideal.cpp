#include "mps/ideal.hpp"

#include <algorithm>

#include "mps/error.hpp"
#include "mps/rational_matrix.hpp"

namespace mps {

namespace {

void require_same_table(const Ideal& I, const Ideal& J) {
  if (!same_table(I.ring(), J.ring())) {
    throw Error(ErrorKind::IncompatibleTables, "ideals live over different variable tables");
  }
}

// Same polynomial in `target`, whose table is p's table without the masked
// variables. Precondition: p mentions no masked variable.
Polynomial drop_variables(const Polynomial& p, const std::vector<bool>& mask, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial::Storage e;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (!mask[i]) e.push_back(t.monomial[i]);
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Eliminates the masked variables of `ring` from ⟨gens⟩; the result lives in
// the table without them, ordered by `order` restricted to that table.
Ideal eliminate_masked(const RingPtr& ring, std::span<const Polynomial> gens, const std::vector<bool>& mask,
                       const MonomialOrder& order) {
  const auto inner = order.kind() == MonomialOrder::Kind::Block ? MonomialOrder::Kind::DegRevLex : order.kind();
  const RingPtr elim_ring = make_ring(ring->table, MonomialOrder::block(mask, inner));
  const GroebnerBasis G = reduced_groebner_basis(gens, elim_ring);

  std::vector<Variable> kept_vars;
  MonomialOrder target_order = order;
  for (std::size_t i = mask.size(); i-- > 0;) {
    if (mask[i]) target_order = target_order.without(i);
  }
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) kept_vars.push_back(ring->table[i]);
  }
  const RingPtr target = make_ring(VariableTable(std::move(kept_vars)), target_order);

  std::vector<Polynomial> kept;
  for (const auto& g : G.generators) {
    bool free = true;
    for (std::size_t i = 0; i < mask.size() && free; ++i) {
      if (mask[i] && g.mentions(i)) free = false;
    }
    if (free) kept.push_back(drop_variables(g, mask, target));
  }
  // The surviving elements form a Groebner basis for the inner order on the
  // remaining block; adopt it as a cache when that is the target order.
  if (target_order.kind() == inner) {
    return Ideal::from_groebner_basis(reduce_basis(GroebnerBasis{target, std::move(kept), false}));
  }
  return Ideal(target, std::move(kept));
}

RingPtr extend_ring(const RingPtr& ring, const std::string& prefix, MonomialOrder order) {
  std::vector<Variable> vars = ring->table.variables();
  vars.push_back(Variable{ring->table.fresh_base(prefix), 0, false});
  return make_ring(VariableTable(std::move(vars)), std::move(order));
}

Polynomial lift(const Polynomial& p, const RingPtr& extended) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial::Storage e = t.monomial.exponents();
    e.push_back(0);
    terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(extended, std::move(terms));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!same_table(g.ring(), ring_)) {
      throw Error(ErrorKind::IncompatibleTables, "generator over a different variable table");
    }
    if (!g.is_zero()) generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, Rational(1));
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::from_groebner_basis(const GroebnerBasis& G) {
  Ideal I(G.ring, G.generators);
  GroebnerBasis basis = G.reduced ? G : reduce_basis(G);
  std::call_once(I.cache_->once, [&] { I.cache_->basis = std::move(basis); });
  return I;
}

const GroebnerBasis& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_, ring_); });
  return *cache_->basis;
}

Ideal Ideal::with_order(const MonomialOrder& order) const {
  if (ring_->order == order) return *this;
  return Ideal(mps::with_order(ring_, order), generators_);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_table(I, J);
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g.in_ring(I.ring()));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "ideal_power needs a positive exponent");
  if (m == 1) return I;
  const auto& gens = I.generators();
  // Products over multisets: index sequences i1 <= i2 <= ... <= im.
  std::vector<Polynomial> products;
  std::vector<std::size_t> idx(m, 0);
  if (gens.empty()) return Ideal::zero(I.ring());
  while (true) {
    Polynomial prod = gens[idx[0]];
    for (std::size_t k = 1; k < m; ++k) prod = prod * gens[idx[k]];
    products.push_back(std::move(prod));
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t r = k; r < m; ++r) idx[r] = idx[k - 1];
  }
  return Ideal(I.ring(), std::move(products));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_table(I, J);
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  const RingPtr ext = extend_ring(I.ring(), "w", I.ring()->order.appended());
  const std::size_t w_index = ext->nvars() - 1;
  const Polynomial w = Polynomial::variable(ext, w_index);
  const Polynomial one_minus_w = Polynomial::constant(ext, Rational(1)) - w;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(w * lift(g, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus_w * lift(g.in_ring(I.ring()), ext));
  std::vector<bool> mask(ext->nvars(), false);
  mask[w_index] = true;
  Ideal out = eliminate_masked(ext, gens, mask, ext->order);
  // Rebind to I's ring object (same table and order by construction).
  return Ideal::from_groebner_basis(GroebnerBasis{I.ring(), out.groebner_basis().generators, true});
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_table(I, J);
  if (J.is_zero()) throw Error(ErrorKind::QuotientByZeroIdeal, "quotient by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& g0 : J.generators()) {
    const Polynomial g = g0.in_ring(I.ring());
    const Ideal meet = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> divided;
    for (const auto& h : meet.groebner_basis().generators) divided.push_back(exact_divide(h, g));
    Ideal part = Ideal::from_groebner_basis(GroebnerBasis{I.ring(), std::move(divided), false});
    result = result ? intersect(*result, part) : part;
  }
  return *result;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw Error(ErrorKind::QuotientByZeroIdeal, "saturation by the zero ideal");
  Ideal current = I;
  while (true) {
    Ideal next = quotient(current, J);
    if (contains(current, next)) return current;
    current = std::move(next);
  }
}

Ideal eliminate(const Ideal& I, std::span<const std::size_t> variables) {
  std::vector<bool> mask(I.table().size(), false);
  for (auto v : variables) {
    if (v >= mask.size()) throw Error(ErrorKind::UnknownVariable, "eliminate: variable index out of range");
    mask[v] = true;
  }
  return eliminate_masked(I.ring(), I.generators(), mask, I.ring()->order);
}

std::int64_t dimension(const Ideal& I) {
  const auto& G = I.groebner_basis();
  const std::size_t n = I.table().size();
  if (G.is_unit_ideal()) return -1;
  if (G.is_zero_ideal()) return static_cast<std::int64_t>(n);
  // Support of each leading monomial as a bitmask.
  std::vector<std::uint64_t> supports;
  for (const auto& g : G.generators) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.leading_monomial()[i] != 0) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  if (n >= 63) throw Error(ErrorKind::InvalidArgument, "dimension: too many variables");
  std::int64_t best = 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t subset = 0; subset <= full; ++subset) {
    const auto size = static_cast<std::int64_t>(__builtin_popcountll(subset));
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool is_member(const Polynomial& p, const Ideal& I) {
  if (!same_table(p.ring(), I.ring())) {
    throw Error(ErrorKind::IncompatibleTables, "is_member: polynomial over a different table");
  }
  return reduces_to_zero(p.in_ring(I.ring()), I.groebner_basis());
}

bool radical_member(const Polynomial& g, const Ideal& I) {
  if (!same_table(g.ring(), I.ring())) {
    throw Error(ErrorKind::IncompatibleTables, "radical_member: polynomial over a different table");
  }
  const RingPtr ext = extend_ring(I.ring(), "z", MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(lift(f, ext));
  const Polynomial z = Polynomial::variable(ext, ext->nvars() - 1);
  gens.push_back(Polynomial::constant(ext, Rational(1)) - z * lift(g.in_ring(I.ring()), ext));
  return reduced_groebner_basis(gens, ext).is_unit_ideal();
}

bool contains(const Ideal& I, const Ideal& J) {
  require_same_table(I, J);
  const auto& G = I.groebner_basis();
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return reduces_to_zero(g.in_ring(I.ring()), G); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_table(I, J);
  const auto& a = I.groebner_basis().generators;
  const Ideal J_in_order = J.with_order(I.ring()->order);
  const auto& b = J_in_order.groebner_basis().generators;
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] == b[k])) return false;
  }
  return true;
}

std::int64_t embedding_dim_at_origin(const Ideal& I) {
  const std::size_t n = I.table().size();
  RationalMatrix rows;
  for (const auto& g : I.generators()) {
    if (constant_term(g) != 0) {
      throw Error(ErrorKind::NotAGermAtOrigin, "generator with nonzero constant term");
    }
    std::vector<Rational> row(n, Rational(0));
    const Polynomial linear = linear_part(g);
    for (const auto& t : linear.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (t.monomial[i] == 1) row[i] = t.coefficient;
      }
    }
    rows.push_back(std::move(row));
  }
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(rank_over_q(std::move(rows)));
}

}  // namespace mps
