#include <doctest.h>

#include "mps/error.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("ring operations") {
  auto r = ring_of("x, x'");
  CHECK(P(r, "(x + x') * (x - x')") == P(r, "x^2 - x'^2"));
  CHECK(P(r, "x^3 - 2*x'") + Polynomial(r) == P(r, "x^3 - 2*x'"));
  CHECK((-P(r, "x - x'")) == P(r, "x' - x"));

  auto s = ring_of("x, y");
  // (x + y)^3 expanded by repeated multiplication, compared coefficient by coefficient
  Polynomial xy = P(s, "x + y");
  Polynomial cube = xy * xy * xy;
  CHECK(xy.pow(3) == cube);
  CHECK(cube.size() == 4);
  for (const auto& t : cube.terms()) {
    const bool edge = t.monomial[0] == 3 || t.monomial[1] == 3;
    CHECK(t.coefficient == (edge ? 1 : 3));
  }
  CHECK(cube == P(s, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(xy.pow(0) == Polynomial::constant(s, 1));
}

TEST_CASE("incompatible tables") {
  auto a = ring_of("x, y");
  auto b = ring_of("x, z");
  CHECK_THROWS_AS(P(a, "x") + P(b, "x"), Error);
  try {
    (void)(P(a, "x") * P(b, "z"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleTables);
  }
}

TEST_CASE("exact division") {
  auto r = ring_of("x, x'");
  CHECK(exact_divide(P(r, "x^2 - x'^2"), P(r, "x - x'")) == P(r, "x + x'"));
  CHECK(exact_divide(P(r, "3*x*x' + 1/2"), P(r, "1")) == P(r, "3*x*x' + 1/2"));
  Polynomial q = exact_divide(P(r, "x^3 - x'^3"), P(r, "x - x'"));
  CHECK(q * P(r, "x - x'") == P(r, "x^3 - x'^3"));
  CHECK(q == P(r, "x^2 + x*x' + x'^2"));

  auto kind = [&](const char* p, const char* d) {
    try {
      exact_divide(P(r, p), P(r, d));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("x^2 + 1", "x") == ErrorKind::NotDivisible);
  CHECK(kind("x", "0") == ErrorKind::DivisionByZero);
}

TEST_CASE("substitution") {
  auto r = ring_of("x, x'");
  std::map<std::size_t, Polynomial> diag{{1, P(r, "x")}};
  CHECK(substitute(P(r, "x + x'"), diag) == P(r, "2*x"));
  CHECK(substitute(P(r, "x^2 + x*x' + x'^2"), diag) == P(r, "3*x^2"));

  auto s = ring_of("t, x");
  auto target = ring_of("x");
  std::map<std::size_t, Polynomial> t0{{0, Polynomial(target)}};
  CHECK(substitute(P(s, "t + x^2"), t0, target) == P(target, "x^2"));
  CHECK_THROWS_AS(substitute(P(s, "t*x + 1"), {}, target), Error);
}

TEST_CASE("partial derivatives") {
  auto r = ring_of("x, y");
  CHECK(partial_derivative(P(r, "x^2*y"), 0) == P(r, "2*x*y"));
  CHECK(partial_derivative(P(r, "x^3 + y^3 + x*y"), 1) == P(r, "3*y^2 + x"));
  CHECK(partial_derivative(P(r, "7/3"), 0).is_zero());
}

TEST_CASE("monomial orders") {
  auto r = ring_of("x, y", MonomialOrder::lex());
  auto lead = [](const Polynomial& p) { return p.leading_monomial(); };
  const auto lex = MonomialOrder::lex();
  const auto drl = MonomialOrder::degrevlex();
  CHECK(lex.compare(lead(P(r, "x")), lead(P(r, "y^2"))) == std::strong_ordering::greater);
  CHECK(drl.compare(lead(P(r, "x^2*y")), lead(P(r, "x*y^2"))) == std::strong_ordering::greater);
  for (const char* m : {"x", "x^3*y", "1"}) {
    CHECK(lex.compare(lead(P(r, m)), lead(P(r, m))) == std::strong_ordering::equal);
    CHECK(drl.compare(lead(P(r, m)), lead(P(r, m))) == std::strong_ordering::equal);
  }
  // degrevlex on three variables: x*z < y^2 since the last variable is penalized
  auto s = ring_of("x, y, z");
  CHECK(drl.less(lead(P(s, "x*z")), lead(P(s, "y^2"))));
  CHECK(lex.less(lead(P(s, "y^2")), lead(P(s, "x*z"))));
}

TEST_CASE("monomial order properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> exp(0, 3);
  auto random_monomial = [&] {
    Monomial::Storage e(4);
    for (auto& x : e) x = exp(rng);
    return Monomial(std::move(e));
  };
  std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                                       MonomialOrder::block({true, false, true, false})};
  for (const auto& order : orders) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
      const auto ab = order.compare(a, b);
      CHECK(order.compare(b, a) == 0 <=> ab);
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(a, Monomial(4)) != std::strong_ordering::less);
      if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
    }
  }
}

TEST_CASE("block order eliminates first") {
  auto order = MonomialOrder::block({false, true, false});
  auto r = ring_of("x, w, y", order);
  // any monomial containing w beats any monomial without it
  CHECK(order.less(P(r, "x^5*y^5").leading_monomial(), P(r, "w").leading_monomial()));
  CHECK(order.less(P(r, "w*y").leading_monomial(), P(r, "w*x").leading_monomial()));
}

TEST_CASE("linear part and constant term") {
  auto r = ring_of("x, x'");
  CHECK(linear_part(P(r, "x + x' + x^2")) == P(r, "x + x'"));
  CHECK(constant_term(P(r, "x^2 + 3")) == 3);
  CHECK(linear_part(P(r, "x^2 + x*x' + x'^2")).is_zero());
  CHECK(constant_term(P(r, "x")) == 0);
}

TEST_CASE("exponent overflow") {
  auto r = ring_of("x");
  CHECK_THROWS_AS(P(r, "x^4000000000").pow(2), Error);
}

TEST_CASE("polynomial arithmetic agrees with evaluation") {
  std::mt19937 rng(2024);
  auto r = ring_of("x, y, z");
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
    const auto pt = random_point(rng, 3);
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    CHECK(evaluate(a - b, pt) == evaluate(a, pt) - evaluate(b, pt));
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    // product rule
    CHECK(partial_derivative(a * b, 1) == partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
    // terms are strictly descending
    for (std::size_t i = 1; i < a.size(); ++i) {
      CHECK(r->order.less(a.terms()[i].monomial, a.terms()[i - 1].monomial));
    }
  }
}

TEST_CASE("order change keeps the polynomial") {
  std::mt19937 rng(5);
  auto r = ring_of("x, y, z");
  auto lex = with_order(r, MonomialOrder::lex());
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(rng, r, 6, 3);
    Polynomial b = a.in_ring(lex);
    const auto pt = random_point(rng, 3);
    CHECK(evaluate(a, pt) == evaluate(b, pt));
    CHECK(b.in_ring(r) == a);
  }
}
