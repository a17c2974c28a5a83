#include "mps/multipoint.hpp"

#include <algorithm>

#include "mps/error.hpp"
#include "mps/rational_matrix.hpp"

namespace mps {

namespace {

// F with the variables whose index satisfies `at_copy2` taken from copy 2 and
// all others from copy 1, inside the double product ring.
Polynomial mixed_copies(const Polynomial& F, const RingPtr& product, std::size_t n,
                        const std::vector<bool>& at_copy2) {
  std::vector<std::size_t> index_map(n);
  for (std::size_t i = 0; i < n; ++i) index_map[i] = at_copy2[i] ? n + i : i;
  return map_variables(F, index_map, product);
}

Polynomial copy_difference(const RingPtr& product, std::size_t a, std::size_t b) {
  return Polynomial::variable(product, a) - Polynomial::variable(product, b);
}

std::vector<std::size_t> copy_one_variables(const RingPtr& product) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < product->nvars(); ++i) {
    if (product->table[i].copy == 1) out.push_back(i);
  }
  return out;
}

std::size_t copy_index(const RingPtr& product, std::size_t base_index, unsigned copy) {
  const auto& v = product->table[base_index];
  auto idx = product->table.find(v.base, copy);
  if (!idx) {
    throw Error(ErrorKind::InvalidArgument,
                "product table lacks copy " + std::to_string(copy) + " of '" + v.base + "'");
  }
  return *idx;
}

void require_k(unsigned k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "multiple point order k must be at least 2");
}

}  // namespace

RingPtr product_ring(const MapGerm& f, unsigned k) {
  std::vector<Variable> vars;
  for (unsigned l = 1; l <= k; ++l) {
    for (const auto& v : f.table().variables()) vars.push_back(Variable{v.base, l, v.parameter});
  }
  return make_ring(VariableTable(std::move(vars)), f.ring()->order);
}

Polynomial copy_of(const MapGerm& f, const Polynomial& p, unsigned copy, const RingPtr& product) {
  const std::size_t n = f.source_dim();
  std::vector<std::size_t> index_map(n);
  for (std::size_t i = 0; i < n; ++i) index_map[i] = (copy - 1) * n + i;
  return map_variables(p, index_map, product);
}

Ideal pullback_ideal(const MapGerm& f, unsigned k) {
  require_k(k);
  const RingPtr product = product_ring(f, k);
  const auto comps = f.full_components();
  std::vector<Polynomial> gens;
  for (unsigned l = 2; l <= k; ++l) {
    for (const auto& F : comps) gens.push_back(copy_of(f, F, 1, product) - copy_of(f, F, l, product));
  }
  return Ideal(product, std::move(gens));
}

Ideal small_diagonal_ideal(const RingPtr& product, unsigned k) {
  require_k(k);
  std::vector<Polynomial> gens;
  const auto bases = copy_one_variables(product);
  for (unsigned l = 2; l <= k; ++l) {
    for (auto i : bases) gens.push_back(copy_difference(product, i, copy_index(product, i, l)));
  }
  return Ideal(product, std::move(gens));
}

Ideal big_diagonal_ideal(const RingPtr& product, unsigned k) {
  require_k(k);
  const auto bases = copy_one_variables(product);
  std::optional<Ideal> result;
  for (unsigned l = 1; l <= k; ++l) {
    for (unsigned m = l + 1; m <= k; ++m) {
      std::vector<Polynomial> gens;
      for (auto i : bases) {
        gens.push_back(copy_difference(product, copy_index(product, i, l), copy_index(product, i, m)));
      }
      Ideal pair(product, std::move(gens));
      result = result ? intersect(*result, pair) : pair;
    }
  }
  return *result;
}

PolyMatrix alpha_matrix(const MapGerm& f, Telescoping order) {
  const RingPtr product = product_ring(f, 2);
  const std::size_t n = f.source_dim();
  const auto comps = f.full_components();
  PolyMatrix alpha(product, comps.size(), n);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> before(n), after(n);
      for (std::size_t v = 0; v < n; ++v) {
        const bool switched = order == Telescoping::Ascending ? v < i : v > i;
        before[v] = switched;
        after[v] = switched || v == i;
      }
      const Polynomial numerator =
          mixed_copies(comps[j], product, n, before) - mixed_copies(comps[j], product, n, after);
      alpha(j, i) = exact_divide(numerator, copy_difference(product, i, n + i));
    }
  }
  for (std::size_t j = 0; j < comps.size(); ++j) {
    Polynomial lhs = copy_of(f, comps[j], 1, product) - copy_of(f, comps[j], 2, product);
    Polynomial rhs(product);
    for (std::size_t i = 0; i < n; ++i) rhs = rhs + alpha(j, i) * copy_difference(product, i, n + i);
    if (!(lhs == rhs)) {
      throw Error(ErrorKind::ConstructionCheckFailed, "alpha matrix does not satisfy f(x)-f(x') = alpha(x-x')");
    }
  }
  return alpha;
}

PolyMatrix jacobian(const MapGerm& f) {
  const auto comps = f.full_components();
  const std::size_t n = f.source_dim();
  PolyMatrix J(f.ring(), comps.size(), n);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) J(j, i) = partial_derivative(comps[j], i);
  }
  return J;
}

Ideal mond_double_ideal(const MapGerm& f, Telescoping order) {
  Ideal P = pullback_ideal(f, 2);
  const PolyMatrix alpha = alpha_matrix(f, order);
  std::vector<Polynomial> gens = P.generators();
  const std::size_t n = f.source_dim();
  if (alpha.rows() >= n) {
    for (auto& m : minors(alpha, n)) gens.push_back(std::move(m));
  }
  return Ideal(P.ring(), std::move(gens));
}

Ideal divided_difference_ideal(const MapGerm& f, unsigned k) {
  require_k(k);
  const std::size_t n = f.source_dim();
  const auto comps = f.full_components();
  if (comps.size() + 1 < n) {
    throw Error(ErrorKind::NotAdaptedForm, "germ has fewer than n-1 components");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(comps[i] == Polynomial::variable(f.ring(), i))) {
      throw Error(ErrorKind::NotAdaptedForm,
                  "component " + std::to_string(i + 1) + " is not the variable '" +
                      display_name(f.table()[i], NameStyle::At) + "'; write the germ as (x, f_n, ..., f_p)");
    }
  }

  std::vector<Variable> vars;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& v = f.table()[i];
    vars.push_back(Variable{v.base, 1, v.parameter});
  }
  const auto& y = f.table()[n - 1];
  for (unsigned a = 1; a <= k; ++a) vars.push_back(Variable{y.base, a, y.parameter});
  const RingPtr ring = make_ring(VariableTable(std::move(vars)), f.ring()->order);
  const std::size_t y_first = n - 1;
  auto y_at = [&](unsigned a) { return y_first + (a - 1); };

  std::vector<std::vector<Polynomial>> table;  // table[j][a-1] = current D_m(a)
  for (std::size_t j = n - 1; j < comps.size(); ++j) {
    std::vector<Polynomial> row;
    for (unsigned a = 1; a <= k; ++a) {
      std::vector<std::size_t> index_map(n);
      for (std::size_t i = 0; i + 1 < n; ++i) index_map[i] = i;
      index_map[n - 1] = y_at(a);
      row.push_back(map_variables(comps[j], index_map, ring));
    }
    table.push_back(std::move(row));
  }

  std::vector<Polynomial> gens;
  for (unsigned m = 2; m <= k; ++m) {
    // D_m(a) = (D_{m-1}(m-1) - D_{m-1}(a)) / (y@(m-1) - y@a), a >= m.
    for (auto& row : table) {
      const Polynomial pivot = row[m - 2];
      for (unsigned a = m; a <= k; ++a) {
        const Polynomial denom = Polynomial::variable(ring, y_at(m - 1)) - Polynomial::variable(ring, y_at(a));
        row[a - 1] = exact_divide(pivot - row[a - 1], denom);
      }
    }
    for (const auto& row : table) gens.push_back(row[m - 1]);
  }
  return Ideal(ring, std::move(gens));
}

Ideal divided_difference_ideal_in_product(const MapGerm& f, unsigned k) {
  const Ideal dd = divided_difference_ideal(f, k);
  const RingPtr product = product_ring(f, k);
  const std::size_t n = f.source_dim();
  std::vector<std::size_t> index_map;
  for (std::size_t i = 0; i + 1 < n; ++i) index_map.push_back(i);
  for (unsigned a = 1; a <= k; ++a) index_map.push_back((a - 1) * n + (n - 1));
  std::vector<Polynomial> gens;
  for (const auto& g : dd.generators()) gens.push_back(map_variables(g, index_map, product));
  for (unsigned l = 2; l <= k; ++l) {
    for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(copy_difference(product, i, (l - 1) * n + i));
  }
  return Ideal(product, std::move(gens));
}

Ideal h_ideal(const MapGerm& f, unsigned k) {
  Ideal P = pullback_ideal(f, k);
  return quotient(P, big_diagonal_ideal(P.ring(), k));
}

Ideal strict_saturation_ideal(const MapGerm& f, unsigned k) {
  Ideal P = pullback_ideal(f, k);
  return saturate(P, big_diagonal_ideal(P.ring(), k));
}

Ideal slice_params(const Ideal& I) {
  const auto& table = I.table();
  if (!table.has_parameters()) throw Error(ErrorKind::NoParameters, "table has no parameter variables");
  std::vector<Variable> vars;
  MonomialOrder order = I.ring()->order;
  for (std::size_t i = table.size(); i-- > 0;) {
    if (table[i].parameter) order = order.without(i);
  }
  for (const auto& v : table.variables()) {
    if (!v.parameter) vars.push_back(v);
  }
  const RingPtr target = make_ring(VariableTable(std::move(vars)), order);
  std::map<std::size_t, Polynomial> images;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].parameter) images.emplace(i, Polynomial(target));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, images, target));
  return Ideal(target, std::move(gens));
}

std::int64_t corank_at_origin(const MapGerm& f) {
  const std::size_t n = f.source_dim();
  const std::size_t p = f.target_dim();
  if (n > p) throw Error(ErrorKind::CorankUndefined, "corank needs n <= p");
  const PolyMatrix J = jacobian(f);
  RationalMatrix df0(J.rows(), std::vector<Rational>(J.cols()));
  for (std::size_t r = 0; r < J.rows(); ++r) {
    for (std::size_t c = 0; c < J.cols(); ++c) df0[r][c] = constant_term(J(r, c));
  }
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(rank_over_q(std::move(df0)));
}

Ideal sigma_hat_ideal(const MapGerm& f, unsigned k) {
  const std::size_t n = f.source_dim();
  if (n > f.target_dim()) throw Error(ErrorKind::CorankUndefined, "corank loci need n <= p");
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "sigma_hat_ideal needs 1 <= k <= n");
  return Ideal(f.ring(), minors(jacobian(f), n - k + 1));
}

ExpectedDims expected_dims(std::int64_t n, std::int64_t p, std::int64_t k) {
  return ExpectedDims{k * n - (k - 1) * p, n - k * (p - n + k)};
}

ComparisonReport compare_d2_h2(const MapGerm& f, const Ideal& I2, const Ideal& H2) {
  const auto n = static_cast<std::int64_t>(f.source_dim());
  const auto p = static_cast<std::int64_t>(f.target_dim());
  if (n > p) throw Error(ErrorKind::CorankUndefined, "comparison needs n <= p");
  ComparisonReport r;
  r.dim_I2 = dimension(I2);
  r.dim_H2 = dimension(H2);
  // Corank >= 2 needs at least two source variables; otherwise the locus is empty.
  r.dim_sigma2hat = n >= 2 ? dimension(sigma_hat_ideal(f, 2)) : -1;
  r.expected_dim = 2 * n - p;
  r.contains_I2_in_H2 = contains(H2, I2);
  r.power_exponent = std::max<std::int64_t>(1, corank_at_origin(f));
  r.power_containment = contains(I2, ideal_power(H2, static_cast<unsigned>(r.power_exponent)));
  r.equal = ideal_equal(I2, H2);
  r.theorem_conditions_met = r.dim_I2 == r.expected_dim && r.dim_sigma2hat < r.expected_dim;
  auto all_radical = [](const Ideal& from, const Ideal& in) {
    const auto& gens = from.groebner_basis().generators;
    return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return radical_member(g, in); });
  };
  r.set_agreement = all_radical(H2, I2) && all_radical(I2, H2);
  return r;
}

ComparisonReport compare_d2_h2(const MapGerm& f) {
  if (f.source_dim() > f.target_dim()) throw Error(ErrorKind::CorankUndefined, "comparison needs n <= p");
  return compare_d2_h2(f, mond_double_ideal(f), h_ideal(f, 2));
}

}  // namespace mps
