#include <doctest.h>

#include "mps/error.hpp"
#include "mps/result.hpp"
#include "support.hpp"

using namespace test;

namespace {

ErrorKind parse_error_kind(const std::string& text, const RingPtr& r) {
  try {
    parse_poly(text, r);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error for '" << text << "'");
  return ErrorKind::InvalidArgument;
}

ErrorKind job_error_kind(const std::string& text) {
  try {
    parse_job(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a job error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse copies") {
  auto r = ring_of("x@1, x@2");
  Polynomial p = P(r, "x^2 - x'^2");
  CHECK(p == P(r, "x@1^2 - x@2^2"));
  CHECK(p.size() == 2);
  CHECK(p.leading_monomial()[0] == 2);

  auto s = ring_of("x, y");
  Polynomial f3 = P(s, "x^3 + y^3 + x*y");
  CHECK(f3 == Polynomial::variable(s, 0).pow(3) + Polynomial::variable(s, 1).pow(3) +
                  Polynomial::variable(s, 0) * Polynomial::variable(s, 1));
}

TEST_CASE("precedence and unary minus") {
  auto r = ring_of("x, y");
  CHECK(P(r, "-x^2") == P(r, "-(x^2)"));
  CHECK(P(r, "2*x + 3*y*x") == P(r, "x*(2 + 3*y)"));
  CHECK(P(r, "x - y - x") == P(r, "-y"));
  CHECK(P(r, "(x + y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "7/2*x") == Polynomial::variable(r, 0).scaled(Rational(7, 2)));
  CHECK(P(r, "--x") == P(r, "x"));
}

TEST_CASE("parse errors") {
  auto r = ring_of("x, y");
  CHECK(parse_error_kind("2x", r) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("x^-1", r) == ErrorKind::NegativeExponent);
  CHECK(parse_error_kind("x^1/2", r) == ErrorKind::NonIntegerExponent);
  CHECK(parse_error_kind("x^y", r) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("x^2^3", r) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("x + ", r) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("(x", r) == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("z", r) == ErrorKind::UnknownVariable);
  CHECK(parse_error_kind("x'", r) == ErrorKind::UnknownVariable);
  try {
    parse_poly("x + $", r);
  } catch (const Error& e) {
    REQUIRE(e.position());
    CHECK(*e.position() == 4);
  }
}

TEST_CASE("render styles") {
  auto r = ring_of("x@1, x@2");
  Polynomial p = P(r, "x@1 + x@2");
  CHECK(render_poly(p, NameStyle::Primes) == "x + x'");
  CHECK(render_poly(p, NameStyle::At) == "x@1 + x@2");
  CHECK(render_poly(Polynomial(r)) == "0");
  CHECK(render_poly(P(r, "-7/2*x^2*x' + 1")) == "-7/2*x^2*x' + 1");

  auto many = ring_of("x@1, x@2, x@3, x@4, x@5");
  CHECK(render_poly(P(many, "x@2 - x@3")) == "x' - x''");
  CHECK_THROWS_AS(render_poly(P(many, "x@5")), Error);
  CHECK(render_poly(P(many, "x@5"), NameStyle::At) == "x@5");
}

TEST_CASE("variable lists") {
  auto vars = parse_variable_list("x, y, x', y'");
  REQUIRE(vars.size() == 4);
  CHECK(vars[0] == Variable{"x", 1, false});
  CHECK(vars[3] == Variable{"y", 2, false});
  auto plain = parse_variable_list("t x");
  CHECK(plain[0].copy == 0);
  CHECK(plain[1] == Variable{"x", 0, false});
  CHECK(parse_variable_token("y''") == Variable{"y", 3, false});
  CHECK(parse_variable_token("z@7") == Variable{"z", 7, false});
}

TEST_CASE("render and parse round trip") {
  std::mt19937 rng(11);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
    auto r = ring_of("x, y, x', y'", order);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial p = random_poly(rng, r, 5, 3);
      CHECK(P(r, render_poly(p)) == p);
      CHECK(P(r, render_poly(p, NameStyle::At)) == p);
    }
  }
}

TEST_CASE("job files") {
  JobSpec cone = load_job(jobs_dir() / "doublecone.job");
  CHECK(cone.source_vars == std::vector<std::string>{"x", "y"});
  CHECK(cone.components.size() == 3);
  CHECK(cone.params.empty());
  CHECK(cone.options.order == "degrevlex");
  CHECK(cone.options.k == 2);

  JobSpec cusp = parse_job("vars = x\nf1 = x^2\nf2 = x^3\n");
  CHECK(cusp.source_vars.size() == 1);
  CHECK(cusp.components.size() == 2);

  JobSpec opts = parse_job("# comment\nvars = x, y\nparams = t\nf2 = y\nf1 = x*t  # trailing\norder = lex\nk = 3\nstyle = at\n");
  CHECK(opts.components == std::vector<std::string>{"x*t", "y"});
  CHECK(opts.params == std::vector<std::string>{"t"});
  CHECK(opts.options.order == "lex");
  CHECK(opts.options.k == 3);
  CHECK(opts.options.style == NameStyle::At);

  CHECK(job_error_kind("f1 = x^2\n") == ErrorKind::MissingKey);
  CHECK(job_error_kind("vars = x\n") == ErrorKind::MissingKey);
  CHECK(job_error_kind("vars = x\nf1 = x\nf3 = x\n") == ErrorKind::MissingKey);
  CHECK(job_error_kind("vars = x\nvars = y\nf1 = x\n") == ErrorKind::DuplicateKey);
  CHECK(job_error_kind("vars = x\nf1 = x\nf1 = x^2\n") == ErrorKind::DuplicateKey);
  CHECK(job_error_kind("vars = x\nf1 = x\ncolour = red\n") == ErrorKind::ParseError);
  CHECK(job_error_kind("vars = x\nf1 = 2x\n") == ErrorKind::SyntaxError);
  CHECK(job_error_kind("vars = x\nf1 = y\n") == ErrorKind::UnknownVariable);
  CHECK(job_error_kind("vars = x\nf1 = x\norder = random\n") == ErrorKind::ParseError);
  CHECK(job_error_kind("vars = x\nf1 = x\nk = 0\n") == ErrorKind::ParseError);

  try {
    parse_job("vars = x\n\nf1 = x +\n");
  } catch (const Error& e) {
    REQUIRE(e.line());
    CHECK(*e.line() == 3);
  }
  CHECK_THROWS_AS(load_job(jobs_dir() / "no_such.job"), Error);
}

TEST_CASE("map germs from jobs") {
  MapGerm cone = germ("doublecone");
  CHECK(cone.source_dim() == 2);
  CHECK(cone.target_dim() == 3);
  MapGerm cusp = germ("cusp");
  CHECK(cusp.source_dim() == 1);
  CHECK(cusp.target_dim() == 2);
  MapGerm cc = germ("crosscap");
  CHECK(cc.num_params() == 1);
  CHECK(cc.source_dim() == 2);
  CHECK(cc.target_dim() == 3);
  CHECK(cc.table()[0] == Variable{"t", 0, true});
  CHECK(cc.full_components().front() == Polynomial::variable(cc.ring(), 0));
  CHECK(render_poly(cc.at_zero_parameters().components()[1]) == "x^3");
  CHECK_THROWS_AS(germ_from_text("vars = x\nf1 = x + 1\n"), Error);
}

TEST_CASE("ideal files") {
  IdealText t = parse_ideal_text("# A\nvars = x, y, x', y'\nx + x'\n\ny + y'\n", MonomialOrder::degrevlex());
  CHECK(t.ring->nvars() == 4);
  REQUIRE(t.generators.size() == 2);
  CHECK(render_poly(t.generators[1]) == "y + y'");
  CHECK_THROWS_AS(parse_ideal_text("x + y\n", MonomialOrder::lex()), Error);
}

TEST_CASE("emit results") {
  auto r = ring_of("x, x'");
  Ideal cusp = ideal_of(r, {"x + x'", "x^2 + x*x' + x'^2"});
  ResultDocument doc;
  doc.vars = r->table.names(NameStyle::Primes);
  doc.order = r->order.name();
  for (const auto& g : cusp.generators()) doc.generators.push_back(render_poly(g));
  for (const auto& g : cusp.groebner_basis().generators) doc.reduced_groebner.push_back(render_poly(g));
  CHECK(doc.reduced_groebner == std::vector<std::string>{"x + x'", "x'^2"});
  const std::string json = emit_result(doc, OutputFormat::Json);
  CHECK(json.find("\"reduced_groebner\": [\n    \"x + x'\",\n    \"x'^2\"\n  ]") != std::string::npos);
  CHECK(json.back() == '\n');
  CHECK(json.find("dimension") == std::string::npos);
  CHECK(json.find("verdicts") == std::string::npos);
  CHECK(parse_result_json(json) == doc);

  // keys alphabetical
  doc.dimension = 0;
  doc.verdicts["equal"] = true;
  doc.verdicts["corank"] = std::int64_t{1};
  const std::string full = emit_result(doc, OutputFormat::Json);
  std::vector<std::size_t> at;
  for (const char* key : {"\"dimension\"", "\"generators\"", "\"order\"", "\"reduced_groebner\"", "\"vars\"",
                          "\"verdicts\""}) {
    at.push_back(full.find(key));
  }
  CHECK(std::is_sorted(at.begin(), at.end()));
  CHECK(full.find("\"corank\": 1") < full.find("\"equal\": true"));
  CHECK(parse_result_json(full) == doc);

  ResultDocument zero;
  zero.vars = {"x"};
  zero.order = "degrevlex";
  CHECK(emit_result(zero, OutputFormat::Json).find("\"generators\": []") != std::string::npos);

  auto x = ring_of("x");
  Ideal unit = ideal_of(x, {"x", "x + 1"});
  CHECK(render_poly(unit.groebner_basis().generators.at(0)) == "1");

  const std::string text = emit_result(doc, OutputFormat::Text);
  CHECK(text.find("  x'^2\n") != std::string::npos);
  CHECK(text.find("equal = true") != std::string::npos);

  CHECK_THROWS_AS(parse_result_json("{\"vars\": 3}"), Error);
  CHECK_THROWS_AS(parse_result_json("not json"), Error);
}

TEST_CASE("cusp basis under lex is sorted ascending") {
  auto r = ring_of("x, x'", MonomialOrder::lex());
  Ideal cusp = ideal_of(r, {"x + x'", "x^2 + x*x' + x'^2"});
  std::vector<std::string> rendered;
  for (const auto& g : cusp.groebner_basis().generators) rendered.push_back(render_poly(g));
  CHECK(rendered == std::vector<std::string>{"x'^2", "x + x'"});
}
