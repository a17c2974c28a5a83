#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mps/ideal.hpp"
#include "mps/job.hpp"
#include "mps/map_germ.hpp"
#include "mps/parser.hpp"

namespace test {

using namespace mps;

inline RingPtr ring_of(const std::string& vars, MonomialOrder order = MonomialOrder::degrevlex()) {
  return make_ring(VariableTable(parse_variable_list(vars)), std::move(order));
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, r));
  return Ideal(r, std::move(ps));
}

inline std::filesystem::path jobs_dir() { return MPS_JOBS_DIR; }

inline MapGerm germ(const std::string& name) {
  return MapGerm::from_job(load_job(jobs_dir() / (name + ".job")));
}

inline MapGerm germ_from_text(const std::string& text) { return MapGerm::from_job(parse_job(text)); }

// Evaluates p at a rational point straight from its term list.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational value = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

inline Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  return Rational(num(rng), den(rng));
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> out(n);
  for (auto& v : out) {
    v = random_rational(rng);
    v.canonicalize();
  }
  return out;
}

inline Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int max_terms = 4, unsigned max_exp = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<Term> terms;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    Monomial::Storage e(r->nvars());
    for (auto& x : e) x = exp(rng);
    Rational c = random_rational(rng);
    c.canonicalize();
    if (c == 0) c = 1;
    terms.push_back(Term{Monomial(std::move(e)), c});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

// Names of the germs exercised by the corpus-wide suites.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "cusp", "fold",   "whitney", "crosscap", "trifold",    "doublecone",
      "a1",   "a2",     "a3",      "a4",       "plane_curve", "double_fold"};
  return names;
}

}  // namespace test
