#include <doctest.h>

#include "mps/error.hpp"
#include "mps/multipoint.hpp"
#include "support.hpp"

using namespace test;

namespace {

// J ⊆ I checked generator by generator with a fresh basis, independent of contains().
bool mutual_membership(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators()) {
    if (!is_member(g, I)) return false;
  }
  for (const auto& g : I.generators()) {
    if (!is_member(g, J)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sum and power") {
  auto r = ring_of("x, y");
  Ideal I = ideal_of(r, {"x^2 - y", "x*y"});
  CHECK(ideal_equal(ideal_sum(I, Ideal::zero(r)), I));
  CHECK(ideal_equal(ideal_power(I, 1), I));
  Ideal m = ideal_of(r, {"x", "y"});
  CHECK(ideal_equal(ideal_power(m, 2), ideal_of(r, {"x^2", "x*y", "y^2"})));
  CHECK(ideal_power(m, 3).generators().size() == 4);
  CHECK_THROWS_AS(ideal_sum(I, ideal_of(ring_of("x, z"), {"z"})), Error);
}

TEST_CASE("intersection") {
  auto r = ring_of("x, y");
  Ideal x = ideal_of(r, {"x"}), y = ideal_of(r, {"y"});
  Ideal xy = intersect(x, y);
  CHECK(mutual_membership(xy, ideal_of(r, {"x*y"})));
  CHECK(ideal_equal(intersect(x, x), x));
  CHECK(xy.table() == r->table);
  Ideal I = ideal_of(r, {"x^2", "y"});
  CHECK(ideal_equal(intersect(I, Ideal::unit(r)), I));
  CHECK(intersect(I, Ideal::zero(r)).is_zero());
}

TEST_CASE("quotient") {
  auto r = ring_of("x, y");
  CHECK(mutual_membership(quotient(ideal_of(r, {"x*y"}), ideal_of(r, {"x"})), ideal_of(r, {"y"})));
  Ideal I = ideal_of(r, {"x^3", "x*y^2"});
  CHECK(ideal_equal(quotient(I, Ideal::unit(r)), I));
  CHECK(ideal_equal(quotient(I, ideal_of(r, {"x"})), ideal_of(r, {"x^2", "y^2"})));
  try {
    quotient(I, Ideal::zero(r));
    FAIL("expected QuotientByZeroIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::QuotientByZeroIdeal);
  }
}

TEST_CASE("quotient of the double cone pullback") {
  MapGerm f = germ("doublecone");
  Ideal P = pullback_ideal(f, 2);
  auto r = P.ring();
  Ideal A = ideal_of(r, {"x + x'", "y + y'"});
  Ideal B2 = ideal_of(r, {"x^2", "x*y", "y^2", "x'", "y'"});
  CHECK(ideal_equal(quotient(P, ideal_of(r, {"x - x'", "y - y'"})), intersect(A, B2)));
}

TEST_CASE("saturation") {
  MapGerm F = germ("crosscap");
  Ideal P = pullback_ideal(F, 2);
  auto r = P.ring();
  Ideal S = saturate(P, ideal_of(r, {"t - t'", "x - x'"}));
  CHECK(ideal_equal(S, ideal_of(r, {"t - t'", "x + x'", "t + x^2"})));

  auto s = ring_of("x, y");
  CHECK(ideal_equal(saturate(ideal_of(s, {"x"}), ideal_of(s, {"y"})), ideal_of(s, {"x"})));
  CHECK(saturate(ideal_of(s, {"x^2"}), ideal_of(s, {"x"})).is_unit());
}

TEST_CASE("saturation is a fixed point") {
  std::mt19937 rng(17);
  auto r = ring_of("x, y, z");
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I(r, {random_poly(rng, r, 3, 2) * P(r, "x"), random_poly(rng, r, 3, 2)});
    Ideal J = ideal_of(r, {"x", "y - z"});
    Ideal S = saturate(I, J);
    CHECK(contains(S, I));
    CHECK(ideal_equal(quotient(S, J), S));
    CHECK(ideal_equal(saturate(S, J), S));
  }
}

TEST_CASE("elimination") {
  auto r = ring_of("t, x, y");
  Ideal I = ideal_of(r, {"t - x^2", "x - y"});
  std::vector<std::size_t> drop{1};
  Ideal E = eliminate(I, drop);
  auto target = E.ring();
  REQUIRE(target->nvars() == 2);
  CHECK(mutual_membership(E, ideal_of(target, {"t - y^2"})));
  // the eliminated ideal is the contraction: its generators lie in I after lifting
  CHECK(is_member(P(r, "t - y^2"), I));
}

TEST_CASE("dimension") {
  auto r = ring_of("x, y");
  CHECK(dimension(ideal_of(r, {"x"})) == 1);
  CHECK(dimension(Ideal::zero(r)) == 2);
  CHECK(dimension(Ideal::unit(r)) == -1);
  CHECK(dimension(ideal_of(r, {"x^2", "x*y"})) == 1);
  CHECK(dimension(ideal_of(r, {"x^2", "y^3"})) == 0);
  auto s = ring_of("x, y, z, w");
  CHECK(dimension(ideal_of(s, {"x*y", "z*w"})) == 2);
  CHECK(dimension(ideal_of(s, {"x - y^2", "z - w^3", "x*z"})) == 1);

  auto c = ring_of("x, x'");
  Ideal cusp = ideal_of(c, {"x + x'", "x^2 + x*x' + x'^2"});
  CHECK(dimension(cusp) == 0);
  CHECK(dimension(cusp) == 2 * 1 - 2);

  CHECK(dimension(mond_double_ideal(germ("doublecone"))) == 2);
}

TEST_CASE("dimension is the same for every order") {
  std::mt19937 rng(41);
  auto r = ring_of("x, y, z");
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I(r, {random_poly(rng, r, 3, 2), random_poly(rng, r, 3, 2)});
    const auto d = dimension(I);
    CHECK(dimension(I.with_order(MonomialOrder::lex())) == d);
    CHECK(dimension(I.with_order(MonomialOrder::block({false, true, false}))) == d);
  }
}

TEST_CASE("radical membership") {
  auto r = ring_of("x, y");
  CHECK(radical_member(P(r, "x"), ideal_of(r, {"x^2"})));
  CHECK_FALSE(radical_member(P(r, "y"), ideal_of(r, {"x"})));
  CHECK(radical_member(P(r, "x + y"), ideal_of(r, {"x^3", "y^5"})));
  CHECK(radical_member(P(r, "1"), Ideal::unit(r)));
}

TEST_CASE("equality and containment") {
  auto r = ring_of("x, x'");
  CHECK(ideal_equal(ideal_of(r, {"x + x'", "x^2"}), ideal_of(r, {"x + x'", "x'^2"})));
  CHECK(contains(ideal_of(r, {"x", "x'"}), ideal_of(r, {"x^2", "x*x'"})));
  CHECK_FALSE(contains(ideal_of(r, {"x^2"}), ideal_of(r, {"x"})));
  CHECK(ideal_equal(ideal_of(r, {"x"}).with_order(MonomialOrder::lex()), ideal_of(r, {"2*x"})));
}

TEST_CASE("embedding dimension") {
  auto r = ring_of("x, x'");
  CHECK(embedding_dim_at_origin(ideal_of(r, {"x + x'", "x^2 + x*x' + x'^2"})) == 1);
  auto s = ring_of("x, y");
  CHECK(embedding_dim_at_origin(ideal_of(s, {"x", "y"})) == 0);
  CHECK(embedding_dim_at_origin(Ideal::zero(s)) == 2);
  CHECK(embedding_dim_at_origin(mond_double_ideal(germ("doublecone"))) == 4);
  CHECK_THROWS_AS(embedding_dim_at_origin(ideal_of(s, {"x + 1"})), Error);
}

TEST_CASE("intersection and quotient agree with membership on random ideals") {
  std::mt19937 rng(23);
  auto r = ring_of("x, y, z");
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I(r, {random_poly(rng, r, 2, 2), random_poly(rng, r, 2, 2)});
    Ideal J(r, {random_poly(rng, r, 2, 2)});
    if (J.is_zero()) continue;
    Ideal K = intersect(I, J);
    CHECK(contains(I, K));
    CHECK(contains(J, K));
    for (const auto& a : I.generators()) {
      for (const auto& b : J.generators()) CHECK(is_member(a * b, K));
    }
    Ideal Q = quotient(I, J);
    CHECK(contains(Q, I));
    for (const auto& q : Q.groebner_basis().generators) {
      for (const auto& b : J.generators()) CHECK(is_member(q * b, I));
    }
  }
}
