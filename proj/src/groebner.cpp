#include "mps/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "mps/error.hpp"

namespace mps {

namespace {

Polynomial reduce_terms(const RingPtr& ring, std::vector<Term> work,
                        const std::vector<const Polynomial*>& reducers) {
  const auto& order = ring->order;
  std::vector<Term> remainder;
  std::size_t start = 0;
  while (start < work.size()) {
    const Term& lead = work[start];
    const Polynomial* divisor = nullptr;
    for (const Polynomial* g : reducers) {
      if (g->leading_monomial().divides(lead.monomial)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++start;
      continue;
    }
    const Rational c = -lead.coefficient / divisor->leading_coefficient();
    const Monomial m = divisor->leading_monomial().quotient_of(lead.monomial);
    work = detail::axpy(work, start + 1, c, m, divisor->term_vector(), 1, order);
    start = 0;
  }
  return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false once the unit ideal has been detected.
  bool insert(const Polynomial& f) {
    if (f.is_zero()) return true;
    if (f.is_constant()) {
      unit_ = true;
      return false;
    }
    polys_.push_back(f.monic());
    active_.push_back(false);
    update(polys_.size() - 1);
    return true;
  }

  GroebnerBasis run() {
    while (!unit_ && !pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const auto& a, const auto& b) {
        return before(a, b);
      });
      CriticalPair pair = std::move(*best);
      pairs_.erase(best);
      Polynomial s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      Polynomial h = reduce_terms(ring_, s.term_vector(), reducers());
      if (!insert(h)) break;
    }
    GroebnerBasis out{ring_, {}, false};
    if (unit_) {
      out.generators.push_back(Polynomial::constant(ring_, Rational(1)));
      return out;
    }
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.generators.push_back(polys_[k]);
    }
    return out;
  }

 private:
  const Monomial& lm(std::size_t k) const { return polys_[k].leading_monomial(); }

  bool before(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (auto c = ring_->order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  std::vector<const Polynomial*> reducers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Gebauer-Moeller update for the new element h.
  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) candidates.push_back({g, h, lm(g).lcm(lh)});
    }

    std::vector<CriticalPair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& pair = candidates[c];
      bool keep = lm(pair.i).coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d) {
          if (candidates[d].lcm.divides(pair.lcm)) keep = false;
        }
        for (std::size_t d = 0; d < kept.size() && keep; ++d) {
          if (kept[d].lcm.divides(pair.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(pair);
    }

    std::vector<CriticalPair> next;
    for (auto& old : pairs_) {
      const bool chain = lh.divides(old.lcm) && !(lm(old.i).lcm(lh) == old.lcm) &&
                         !(lm(old.j).lcm(lh) == old.lcm);
      if (!chain) next.push_back(std::move(old));
    }
    for (auto& pair : kept) {
      if (!lm(pair.i).coprime(lh)) next.push_back(std::move(pair));
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(lm(g))) active_[g] = false;
    }
    active_[h] = true;
  }

  RingPtr ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  bool unit_ = false;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero();
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G) {
  std::vector<Polynomial> converted;
  converted.reserve(G.size());
  for (const auto& g : G) {
    if (!same_table(g.ring(), p.ring())) {
      throw Error(ErrorKind::IncompatibleTables, "normal_form: divisor over a different table");
    }
    if (!g.is_zero()) converted.push_back(g.in_ring(p.ring()));
  }
  std::vector<const Polynomial*> reducers;
  for (const auto& g : converted) reducers.push_back(&g);
  return reduce_terms(p.ring(), p.term_vector(), reducers);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Polynomial a = f.times_term(f.leading_monomial().quotient_of(l), Rational(1) / f.leading_coefficient());
  const Polynomial b = g.times_term(g.leading_monomial().quotient_of(l), Rational(1) / g.leading_coefficient());
  return a - b;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const RingPtr& ring) {
  Buchberger state(ring);
  for (const auto& f : generators) {
    if (!same_table(f.ring(), ring)) {
      throw Error(ErrorKind::IncompatibleTables, "buchberger: generator over a different table");
    }
    if (!state.insert(f.in_ring(ring))) break;
  }
  return state.run();
}

GroebnerBasis reduce_basis(const GroebnerBasis& G) {
  std::vector<Polynomial> gens;
  for (const auto& g : G.generators) {
    if (!g.is_zero()) gens.push_back(g.in_ring(G.ring).monic());
  }
  const auto& order = G.order();
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : gens) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  GroebnerBasis out{G.ring, {}, true};
  if (!minimal.empty() && minimal.front().is_constant()) {
    out.generators.push_back(Polynomial::constant(G.ring, Rational(1)));
    return out;
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial*> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(&minimal[m]);
    }
    const auto& terms = minimal[k].term_vector();
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    Polynomial reduced_tail = reduce_terms(G.ring, std::move(tail), others);
    std::vector<Term> full;
    full.reserve(reduced_tail.size() + 1);
    full.push_back(terms.front());
    for (const auto& t : reduced_tail.terms()) full.push_back(t);
    out.generators.push_back(Polynomial::from_sorted_terms(G.ring, std::move(full)));
  }
  return out;
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const RingPtr& ring) {
  return reduce_basis(buchberger(generators, ring));
}

bool reduces_to_zero(const Polynomial& p, const GroebnerBasis& G) {
  return normal_form(p, G.generators).is_zero();
}

}  // namespace mps
