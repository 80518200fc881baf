#include <doctest.h>

#include <set>
#include <string>

#include "tropval/error.hpp"
#include "tropval/graded.hpp"
#include "tropval/graded_io.hpp"

using namespace tropval;

namespace {

using Spec = GradedAlgebraSpec;

BasisKey key(Grade g, int i = 0) { return BasisKey{std::move(g), i}; }

// Q[x, y]/<xy> truncated at degree 2: the Cartan component of x*y vanishes.
GradedAlgebra axes_algebra() {
  Spec s;
  s.monoid_dim = 2;
  s.truncation_weights = {Rational(1), Rational(1)};
  s.truncation_bound = 2;
  for (const Grade& g : {Grade{0, 0}, Grade{1, 0}, Grade{0, 1}, Grade{2, 0}, Grade{0, 2}})
    s.components.push_back({g, 1});
  for (const Grade& g : {Grade{0, 0}, Grade{1, 0}, Grade{0, 1}, Grade{2, 0}, Grade{0, 2}}) {
    s.products.push_back({key({0, 0}), key(g), {{key(g), Rational(1)}}});
    if (g != Grade{0, 0}) s.products.push_back({key(g), key({0, 0}), {{key(g), Rational(1)}}});
  }
  s.products.push_back({key({1, 0}), key({1, 0}), {{key({2, 0}), Rational(1)}}});
  s.products.push_back({key({0, 1}), key({0, 1}), {{key({0, 2}), Rational(1)}}});
  s.labels = {{key({0, 0}), "1"}, {key({1, 0}), "x"}, {key({0, 1}), "y"},
              {key({2, 0}), "x^2"}, {key({0, 2}), "y^2"}};
  return GradedAlgebra::build(s);
}

GradedAlgebra poly3(int N = 3) { return monoid_algebra({"x", "y", "z"}, N); }

LexFunctional row(std::vector<Rational> r) { return LexFunctional::single(std::move(r)); }

}  // namespace

TEST_CASE("monoid algebras are single-term") {
  const auto A = poly3(6);
  CHECK(A.basis_size() == 84);
  for (const auto& [pair, prod] : A.table()) {
    REQUIRE(prod.size() == 1);
    CHECK(prod.begin()->second == 1);
    Grade s = A.grade(pair.first);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += A.grade(pair.second)[i];
    CHECK(A.grade(prod.begin()->first) == s);
  }
}

TEST_CASE("truncation limits the products") {
  const auto A = poly3(2);
  const auto x = *A.find(key({1, 0, 0})), xy = *A.find(key({1, 1, 0}));
  CHECK(A.product_defined(x, x));
  CHECK_FALSE(A.product_defined(x, xy));
  CHECK_THROWS_AS(A.product(x, xy), Error);
}

TEST_CASE("associativity is validated") {
  Spec s;
  s.monoid_dim = 1;
  s.truncation_weights = {Rational(1)};
  s.truncation_bound = 2;
  s.components = {{{0}, 1}, {{1}, 1}};
  s.products = {{key({0}), key({0}), {{key({0}), Rational(1)}}},
                {key({0}), key({1}), {{key({1}), Rational(2)}}},
                {key({1}), key({0}), {{key({1}), Rational(1)}}}};
  try {
    GradedAlgebra::build(s);
    FAIL("expected AssociativityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssociativityViolation);
  }
}

TEST_CASE("graded values") {
  const auto A = poly3();
  const GradedValuation gv(row({1, 1, 1}));
  CHECK(gv.value(A, parse_element(A, "x*y + x*z")) == TropicalValue(2));
  CHECK(gv.value(A, parse_element(A, "x*y")) == TropicalValue(2));
  CHECK(gv.value(A, Element{}).is_bottom());
  CHECK(gv.value(A, parse_element(A, "x + y^2")) == TropicalValue(2));
}

TEST_CASE("override validation") {
  const auto A = poly3();
  const GradedValuation gv(row({1, 1, 1}));
  CHECK_THROWS_AS(gv.with_override(A, parse_element(A, "x*y"), 1), Error);
  CHECK_THROWS_AS(gv.with_override(A, parse_element(A, "x + y^2"), 3), Error);
  CHECK_THROWS_AS(gv.with_override(A, Element{}, 0), Error);
  const auto o = gv.with_override(A, parse_element(A, "x*y + x*z"), 1);
  CHECK(o.value(A, parse_element(A, "2*x*y + 2*x*z")) == TropicalValue(1));
  CHECK(o.value(A, parse_element(A, "x*y - x*z")) == TropicalValue(2));
}

TEST_CASE("the x, y, z counterexample") {
  const auto A = poly3();
  const auto gv = GradedValuation(row({1, 1, 1})).with_override(A, parse_element(A, "x*y + x*z"), 1);
  const auto graded = check_graded_axioms(A, gv, 7, 200);
  CHECK(graded.passes());
  const auto full = check_full_axioms(A, gv, 7, 200);
  CHECK_FALSE(full.passes());
  REQUIRE_FALSE(full.multiplicativity_failures.empty());
  const auto& f = full.multiplicativity_failures.front();
  CHECK(A.to_string(f.a) == "x");
  CHECK(A.to_string(f.b) == "y + z");
  CHECK(f.product_value == TropicalValue(1));
  CHECK(f.expected == TropicalValue(2));
  CHECK_FALSE(f.homogeneous);
}

TEST_CASE("monoid algebras pass both checks for any functional") {
  const auto A = poly3();
  for (const auto& h : {row({1, 1, 1}), row({2, -1, 0}), row({0, 0, 0}),
                        LexFunctional{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}}) {
    const GradedValuation gv(h);
    CHECK(check_graded_axioms(A, gv, 3, 150).passes());
    CHECK(check_full_axioms(A, gv, 3, 150).passes());
  }
}

TEST_CASE("lower triangularity") {
  CHECK(check_lower_triangular(poly3(), row({1, 2, 3})).holds);
  const auto axes = axes_algebra();
  const auto r = check_lower_triangular(axes, row({1, 1}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(std::set<std::string>{axes.label(r.witness->first), axes.label(r.witness->second)} ==
        std::set<std::string>{"x", "y"});
}

TEST_CASE("monoid theorem report") {
  const auto A = poly3();
  const auto ok = check_monoid_theorem(A, LexFunctional{{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}}, 5, 100);
  CHECK(ok.hypotheses_hold());
  CHECK(ok.conclusion_holds());
  CHECK(ok.pairs_checked == 100);

  const auto coarse = check_monoid_theorem(A, row({1, 1, 1}), 5, 50);
  CHECK_FALSE(coarse.hypothesis_total_order);

  const auto bad = check_monoid_theorem(axes_algebra(), LexFunctional{{{1, 0}, {0, 1}}}, 5, 50);
  CHECK_FALSE(bad.hypothesis_products);
  REQUIRE(bad.product_witness);
}

TEST_CASE("associated graded") {
  const auto A = poly3();
  const auto h = row({1, 2, 3});
  const auto G = associated_graded(A, h);
  CHECK(G.table() == A.table());
  CHECK(associated_graded(G, h).table() == G.table());
  CHECK(associated_graded(A, row({0, 0, 0})).table() == A.table());
  CHECK_THROWS_AS(associated_graded(axes_algebra(), row({1, 1})), Error);
}

TEST_CASE("zero divisors") {
  CHECK_FALSE(zero_divisor_search(monoid_algebra({"x", "y"}, 4), 4).has_value());
  const auto axes = axes_algebra();
  const auto w = zero_divisor_search(axes, 2);
  REQUIRE(w.has_value());
  CHECK(std::set<std::string>{axes.to_string(w->first), axes.to_string(w->second)} ==
        std::set<std::string>{"x", "y"});
}

TEST_CASE("coarsening keeps full-check valuations graded") {
  const auto A = poly3();
  const GradedValuation fine(row({1, 1, 2}));
  REQUIRE(check_full_axioms(A, fine, 3, 100).passes());
  const auto total = coarsen(A, {{1, 1, 1}}, {Rational(1)});
  CHECK(total.algebra.components().size() == 4);
  // Only functionals that factor through the coarsening make sense there.
  const auto partial = coarsen(A, {{1, 1, 0}, {0, 0, 1}}, {Rational(1), Rational(1)});
  CHECK(check_graded_axioms(partial.algebra, GradedValuation(row({1, 2})), 3, 100).passes());
  CHECK(check_graded_axioms(total.algebra, GradedValuation(row({1})), 3, 100).passes());
}

TEST_CASE("functionals with the same preorder behave alike") {
  const auto A = poly3();
  for (const auto& [h, g] : {std::pair{row({1, 2, 3}), row({2, 4, 6})},
                             std::pair{row({0, 1, 1}), row({0, 5, 5})}}) {
    const bool a = check_full_axioms(A, GradedValuation(h), 9, 100).passes();
    const bool b = check_full_axioms(A, GradedValuation(g), 9, 100).passes();
    CHECK(a);
    CHECK(a == b);
  }
}

TEST_CASE("graded file format round trip") {
  const auto A = poly3(2);
  const std::string text = format_graded_algebra(A);
  const auto B = parse_graded_algebra(text);
  CHECK(format_graded_algebra(B) == text);
  CHECK(B.table() == A.table());
  CHECK(B.label(*B.find(key({1, 1, 0}))) == "x*y");
}

TEST_CASE("graded file errors") {
  CHECK_THROWS_AS(parse_graded_algebra("monoid dim 1;\ncomponent 0 size one;\n"), ParseError);
  CHECK_THROWS_AS(parse_graded_algebra("monoid dim 2;\ncomponent 0 size 1;\n"), Error);
  CHECK_THROWS_AS(parse_element(poly3(2), "x + w"), Error);
}

TEST_CASE("elements and functionals from text") {
  const auto A = poly3(2);
  const Element e = parse_element(A, "2*(1,0,0,0) - y + 1/2*x*z");
  CHECK(A.to_string(e) == "1/2*x*z + 2*x - y");
  const auto h = parse_lex_functional("1 0 0 | 0 1 1/2", 3);
  CHECK(h.rows.size() == 2);
  CHECK(h.to_string() == "1 0 0 | 0 1 1/2");
  CHECK_THROWS_AS(parse_lex_functional("1 0", 3), Error);
}
