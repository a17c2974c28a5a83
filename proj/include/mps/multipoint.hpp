#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mps/ideal.hpp"
#include "mps/map_germ.hpp"
#include "mps/poly_matrix.hpp"

namespace mps {

/// Multiple point ideals of map germs.
///
/// Product rings X^k are laid out copy-major: every germ variable (parameters
/// included) with copy 1, then with copy 2, and so on. Copy 1 renders as the
/// bare name, so in the primes style a double point ring reads x, y, x', y'.
/// All constructions use the germ ring's monomial order.

RingPtr product_ring(const MapGerm& f, unsigned k);

/// Copy `copy` of a germ-ring polynomial inside product_ring(f, k).
Polynomial copy_of(const MapGerm& f, const Polynomial& p, unsigned copy, const RingPtr& product);

/// P(f,k): f_j(x^(1)) - f_j(x^(l)) for every component (parameter identities
/// included) and every 2 <= l <= k.
Ideal pullback_ideal(const MapGerm& f, unsigned k);

/// Small diagonal: sum over l of ⟨v@1 - v@l⟩. `product` must hold copies 1..k
/// of each base variable.
Ideal small_diagonal_ideal(const RingPtr& product, unsigned k);
/// Big diagonal: intersection over pairs l < m of ⟨v@l - v@m⟩.
Ideal big_diagonal_ideal(const RingPtr& product, unsigned k);

enum class Telescoping { Ascending, Descending };

/// A matrix alpha with f(x) - f(x') = alpha * (x - x') over product_ring(f, 2),
/// rows = full components, columns = germ variables. Entries are exact divided
/// differences obtained by switching one variable at a time from copy 1 to
/// copy 2 (ascending or descending variable index). The identity is verified
/// before returning (ConstructionCheckFailed otherwise).
PolyMatrix alpha_matrix(const MapGerm& f, Telescoping order = Telescoping::Ascending);

/// Jacobian of the full components, rows x cols = (p+r) x (n+r), in the germ ring.
PolyMatrix jacobian(const MapGerm& f);

/// I²(f) = P(f,2) + ⟨(n+r)x(n+r) minors of alpha⟩.
Ideal mond_double_ideal(const MapGerm& f, Telescoping order = Telescoping::Ascending);

/// I^k(f) for a germ in adapted form (x, y) -> (x, f_n, ..., f_p): the first
/// n-1 full components must equal the first n-1 variables (NotAdaptedForm
/// otherwise). Lives in the ring x@1.., y@1, ..., y@k and is generated by the
/// iterated divided differences f_j[y@1, ..., y@m], 2 <= m <= k.
Ideal divided_difference_ideal(const MapGerm& f, unsigned k);

/// divided_difference_ideal(f, k) moved into product_ring(f, k) together with
/// x_i@1 - x_i@l for the adapted coordinates, for comparison with I²(f), H^k(f).
Ideal divided_difference_ideal_in_product(const MapGerm& f, unsigned k);

/// H^k(f) = P(f,k) : I_D.
Ideal h_ideal(const MapGerm& f, unsigned k);

/// P(f,k) : I_D^∞. Returned without taking the radical.
Ideal strict_saturation_ideal(const MapGerm& f, unsigned k);

/// Sets every parameter variable to zero and drops it from the table.
/// NoParameters when the table has none.
Ideal slice_params(const Ideal& I);

/// n+r minus the rank of df(0). CorankUndefined when n+r > p+r.
std::int64_t corank_at_origin(const MapGerm& f);

/// Ideal of the (n-k+1)-minors of df in the germ ring; its zero set is the
/// closure of the points of corank >= k. Needs 1 <= k <= n <= p.
Ideal sigma_hat_ideal(const MapGerm& f, unsigned k);

struct ExpectedDims {
  std::int64_t multiple_points;  // kn - (k-1)p
  std::int64_t sigma;            // n - k(p-n+k)
};
ExpectedDims expected_dims(std::int64_t n, std::int64_t p, std::int64_t k);

struct ComparisonReport {
  std::int64_t dim_I2 = 0;
  std::int64_t dim_H2 = 0;
  std::int64_t dim_sigma2hat = 0;
  std::int64_t expected_dim = 0;
  bool contains_I2_in_H2 = false;
  bool power_containment = false;
  std::int64_t power_exponent = 1;
  bool equal = false;
  bool theorem_conditions_met = false;
  bool set_agreement = false;
};

/// Compares I²(f) with H²(f). Needs n <= p.
ComparisonReport compare_d2_h2(const MapGerm& f);
/// Same, with I²(f) and H²(f) already computed.
ComparisonReport compare_d2_h2(const MapGerm& f, const Ideal& I2, const Ideal& H2);

}  // namespace mps
