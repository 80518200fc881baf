#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "tropval/error.hpp"
#include "tropval/parser.hpp"

using namespace tropval;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Syntax;
}

}  // namespace

TEST_CASE("parse_ring") {
  CHECK(parse_ring("ring x y z;")->names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_ring("ring t x;")->names() == std::vector<std::string>{"t", "x"});
  CHECK(kind_of([] { parse_ring("ring x x;"); }) == ErrorKind::DuplicateVariable);
  CHECK(kind_of([] { parse_ring("ring ;"); }) == ErrorKind::Syntax);
}

TEST_CASE("parse_poly") {
  const Ring R = parse_ring("ring x y;");
  const Polynomial f = parse_poly(R, "x^2*y - 3*y + 1");
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient({2, 1}) == 1);
  CHECK(f.coefficient({0, 1}) == -3);
  CHECK(f.coefficient({0, 0}) == 1);

  const Polynomial g = parse_poly(R, "x + y - x");
  CHECK(g.term_count() == 1);
  CHECK(g.coefficient({0, 1}) == 1);

  CHECK(kind_of([&] { parse_poly(R, "x + w"); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([&] { parse_poly(R, "x / y"); }) == ErrorKind::Syntax);
  CHECK(kind_of([&] { parse_poly(R, "x / 0"); }) == ErrorKind::Syntax);
  CHECK(kind_of([&] { parse_poly(R, "(x + y"); }) == ErrorKind::Syntax);
  CHECK(parse_poly(R, "(x + y)^2 / 2") == parse_poly(R, "1/2*x^2 + x*y + 1/2*y^2"));
  CHECK(parse_poly(R, "-(x - 1)") == parse_poly(R, "1 - x"));
}

TEST_CASE("parse errors carry a position") {
  const Ring R = parse_ring("ring x y;");
  try {
    parse_poly(R, "x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("arithmetic") {
  const Ring R = parse_ring("ring x y;");
  const auto p = [&](const char* s) { return parse_poly(R, s); };
  CHECK(p("x + 1") * p("x - 1") == p("x^2 - 1"));
  CHECK(p("x + y") + Polynomial(R) == p("x + y"));
  CHECK(p("x + y") * p("x + y") == p("x^2 + 2*x*y + y^2"));
  CHECK((p("x") - p("x")).is_zero());
  CHECK(p("x + y").pow(3) == p("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("operations across rings are rejected") {
  const Ring R = parse_ring("ring x y;");
  const Ring S = parse_ring("ring u v;");
  CHECK(kind_of([&] { (void)(parse_poly(R, "x") + parse_poly(S, "u")); }) ==
        ErrorKind::RingMismatch);
}

TEST_CASE("printer output") {
  const Ring R = parse_ring("ring x y;");
  CHECK(parse_poly(R, "1 - 3*y + y*x^2").to_string() == "x^2*y - 3*y + 1");
  CHECK(parse_poly(R, "-x + 1/2").to_string() == "-x + 1/2");
  CHECK(Polynomial(R).to_string() == "0");
}

TEST_CASE("print then parse is the identity") {
  const Ring R = parse_ring("ring x y z;");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = oracle::random_poly(rng, R, 5, 6, 9) * Polynomial::constant(R, Rational(1, 3));
    CHECK(parse_poly(R, f.to_string()) == f);
  }
}

TEST_CASE("ring axioms on sampled triples") {
  const Ring R = parse_ring("ring x y z;");
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_poly(rng, R, 3, 4, 5);
    const auto b = oracle::random_poly(rng, R, 3, 4, 5);
    const auto c = oracle::random_poly(rng, R, 3, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("presentation files") {
  const auto pf = parse_presentation(
      "# comment\nring t x;\nideal x - t - 1, x^2;\ncoeffval tadic t -1/2;\nweight 0 1;\n");
  CHECK(pf.presentation.ideal_gens.size() == 2);
  REQUIRE(pf.presentation.coeff_valuation.tadic.has_value());
  CHECK(pf.presentation.coeff_valuation.tadic->t_index == 0);
  CHECK(pf.presentation.coeff_valuation.tadic->t_weight == Rational(-1, 2));
  REQUIRE(pf.weight.has_value());
  CHECK(*pf.weight == WeightVector{0, 1});
  CHECK(parse_presentation(pf.presentation.to_string()).presentation.to_string() ==
        pf.presentation.to_string());

  CHECK(kind_of([] { parse_presentation("ring x y;\nweight 1;\n"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_presentation("ring x y\nideal x;\n"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_presentation("ring x y;\nideal x - x;\n"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_presentation("ring x;\ncoeffval tadic q 1;\n"); }) ==
        ErrorKind::UnknownVariable);
}

TEST_CASE("coefficient valuation replaces the uniformizer weight") {
  const Ring R = parse_ring("ring t x;");
  const auto cv = parse_coeffval(*R, "tadic t 3");
  CHECK(cv.apply(WeightVector{0, 1}) == WeightVector{3, 1});
  CHECK(parse_coeffval(*R, "trivial").is_trivial());
}
