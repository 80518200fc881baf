#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropval/error.hpp"
#include "tropval/groebner.hpp"
#include "tropval/initial.hpp"
#include "tropval/parser.hpp"

using namespace tropval;

namespace {

Presentation pres(const char* text) { return parse_presentation(text).presentation; }

std::vector<Polynomial> polys(const Ring& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(R, t));
  return out;
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

}  // namespace

TEST_CASE("monomial orders") {
  const ExponentVector x{1, 0}, y{0, 1};
  CHECK(MonomialOrder(WeightVector{1, 0}).compare(x, y) > 0);
  CHECK(MonomialOrder::lex(2).compare(x, y) > 0);
  CHECK(MonomialOrder::grevlex(2).compare(x, x) == 0);
  // grevlex: x*z^2 < y^3? equal degree, last nonzero entry of (1,0,2)-(0,3,0) is positive.
  CHECK(MonomialOrder::grevlex(3).less({1, 0, 2}, {0, 3, 0}));
  CHECK(MonomialOrder::lex(3).less({0, 3, 0}, {1, 0, 2}));
  CHECK(MonomialOrder(WeightVector{0, 0}) == MonomialOrder::grevlex(2));
  CHECK_FALSE(MonomialOrder(WeightVector{-1, 0}).is_well_order());
}

TEST_CASE("weight orders are multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 4), w(-3, 3);
  for (int i = 0; i < 500; ++i) {
    const MonomialOrder ord(WeightVector{w(rng), w(rng), w(rng)});
    const ExponentVector a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)},
        c{e(rng), e(rng), e(rng)};
    CHECK(ord.compare(a, b) == ord.compare(a + c, b + c));
  }
}

TEST_CASE("normal_form by hand division") {
  const Ring R = parse_ring("ring x y;");
  const auto G = buchberger(R, polys(R, {"x^2 - y"}), MonomialOrder::lex(2));
  // x^2 -> y in one step.
  CHECK(normal_form(parse_poly(R, "x^2"), G) == parse_poly(R, "y"));
  // x^3 + x*y -> x*y + x*y = 2*x*y.
  CHECK(normal_form(parse_poly(R, "x^3 + x*y"), G) == parse_poly(R, "2*x*y"));
  CHECK(normal_form(parse_poly(R, "y"), G) == parse_poly(R, "y"));
  CHECK(normal_form(parse_poly(R, "(x^2 - y)*(x + y^3)"), G).is_zero());
}

TEST_CASE("buchberger on small ideals") {
  const Ring R = parse_ring("ring x y;");
  const auto L = buchberger(R, polys(R, {"2*x + 2*y + 2"}), MonomialOrder::grevlex(2));
  REQUIRE(L.gens.size() == 1);
  CHECK(L.gens[0] == parse_poly(R, "x + y + 1"));

  const auto U = buchberger(R, polys(R, {"x*y - 1", "x"}), MonomialOrder::grevlex(2));
  CHECK(U.is_unit());
  REQUIRE(U.gens.size() == 1);
  CHECK(U.gens[0] == Polynomial::constant(R, 1));

  CHECK(buchberger(R, {}, MonomialOrder::grevlex(2)).is_zero_ideal());
}

TEST_CASE("twisted cubic under lex") {
  const Ring R = parse_ring("ring x y z;");
  const auto gens = polys(R, {"x^2 - y", "x^3 - z"});
  const auto G = buchberger(R, gens, MonomialOrder::lex(3));
  CHECK(G.reduced);
  CHECK(in_ideal(parse_poly(R, "y^3 - z^2"), G));
  bool has_elimination = false;
  for (const auto& g : G.gens) has_elimination |= g == parse_poly(R, "y^3 - z^2");
  CHECK(has_elimination);
  // Macaulay oracle in the sound direction: every element found in degree <= 6 is a member.
  for (const char* f : {"y^3 - z^2", "x*y - z", "x*z - y^2", "y^2 - x*z + z - x*y"}) {
    const auto p = parse_poly(R, f);
    CHECK(oracle::macaulay_member_upto(gens, p, 6) == in_ideal(p, G));
  }
}

TEST_CASE("reduced bases are reduced") {
  const Ring R = parse_ring("ring x y z;");
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      auto g = oracle::random_poly(rng, R, 3, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3),
                              MonomialOrder(WeightVector{2, 0, 1})}) {
      const auto G = buchberger(R, gens, order);
      for (std::size_t i = 0; i < G.gens.size(); ++i) {
        CHECK(leading_coefficient(G.gens[i], order) == 1);
        for (std::size_t j = 0; j < G.gens.size(); ++j) {
          if (i == j) continue;
          for (const auto& [e, c] : G.gens[i].terms()) CHECK_FALSE(G.leading[j].divides(e));
          CHECK(normal_form(s_polynomial(G.gens[i], G.gens[j], order), G).is_zero());
        }
      }
      for (const auto& g : gens) CHECK(in_ideal(g, G));
    }
  }
}

TEST_CASE("membership agrees with the Macaulay oracle on homogeneous ideals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const Ring R = parse_ring(trial % 2 ? "ring x y z;" : "ring x y;");
    const std::size_t n = R->size();
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> deg(1, 3);
    for (int k = 0; k < 2; ++k) {
      auto g = oracle::random_homogeneous(rng, R, deg(rng), 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const auto G = buchberger(R, gens, MonomialOrder::grevlex(n));
    for (int d = 0; d <= 5; ++d) {
      const auto mons = oracle::monomials(n, d);
      std::size_t standard = 0;
      for (const auto& m : mons) {
        bool divisible = false;
        for (const auto& lm : G.leading) divisible |= lm.divides(m);
        standard += divisible ? 0 : 1;
        const auto p = Polynomial::monomial(R, m);
        CHECK(oracle::macaulay_member(gens, p, d) == in_ideal(p, G));
      }
      CHECK(standard == mons.size() - oracle::macaulay_rank(gens, n, d));
      const auto f = oracle::random_homogeneous(rng, R, d, 4, 4);
      CHECK(oracle::macaulay_member(gens, f, d) == in_ideal(f, G));
    }
  }
}

TEST_CASE("normal forms are idempotent and never raise the weight") {
  const Ring R = parse_ring("ring x y z;");
  const auto gens = polys(R, {"x^2 - y", "x*z - y^2 + 1"});
  const WeightVector w{1, 3, 2};
  const auto G = buchberger(R, gens, MonomialOrder(w));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_poly(rng, R, 4, 5, 5);
    if (f.is_zero()) continue;
    const auto r = normal_form(f, G);
    CHECK(normal_form(r, G) == r);
    if (!r.is_zero()) CHECK(max_weight(r, w) <= max_weight(f, w));
  }
}

TEST_CASE("non-well-orders stop with NonTermination") {
  const Ring R = parse_ring("ring x y;");
  const auto G = buchberger(R, polys(R, {"x + y + 1"}), MonomialOrder(WeightVector{-1, -1}));
  try {
    normal_form(parse_poly(R, "1"), G, ReductionLimits{500});
    FAIL("expected NonTermination");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTermination);
  }
}

TEST_CASE("initial_form") {
  const Ring R = parse_ring("ring x y;");
  const auto f = parse_poly(R, "x + y + 1");
  CHECK(initial_form(f, WeightVector{0, 0}) == f);
  CHECK(initial_form(f, WeightVector{1, 0}) == parse_poly(R, "x"));
  CHECK(initial_form(f, WeightVector{2, 2}) == parse_poly(R, "x + y"));
  CHECK(initial_form(f, WeightVector{-1, -1}) == parse_poly(R, "1"));
  CHECK_THROWS_AS(initial_form(Polynomial(R), WeightVector{0, 0}), Error);

  std::mt19937_64 rng(8);
  const Ring S = parse_ring("ring x y z;");
  std::uniform_int_distribution<int> wd(-2, 3);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_poly(rng, S, 3, 4, 3), b = oracle::random_poly(rng, S, 3, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const WeightVector w{wd(rng), wd(rng), wd(rng)};
    CHECK(initial_form(a * b, w) == initial_form(a, w) * initial_form(b, w));
  }
}

TEST_CASE("initial_form with a uniformizer") {
  const Ring R = parse_ring("ring t x;");
  const auto cv = CoeffValuation::t_adic(0, Rational(1));
  CHECK(initial_form(parse_poly(R, "x - t - 1"), WeightVector{0, 1}, cv) ==
        parse_poly(R, "x - t"));
}

TEST_CASE("homogenize and dehomogenize") {
  const Ring R = parse_ring("ring x y;");
  const Ring H = R->with_fresh_variable("h");
  const auto f = parse_poly(R, "x^2 + y + 1");
  const auto fh = homogenize(f, H);
  CHECK(fh.to_string() == "x^2 + y*h + h^2");
  CHECK(dehomogenize(fh, R) == f);
}

TEST_CASE("initial_ideal of the line") {
  const auto P = pres("ring x y; ideal x + y + 1;");
  const Ring& R = P.ring;
  CHECK(initial_ideal(P, WeightVector{0, 0}) == polys(R, {"x + y + 1"}));
  CHECK(initial_ideal(P, WeightVector{1, 1}) == polys(R, {"x + y"}));
  CHECK(initial_ideal(P, WeightVector{1, 0}) == polys(R, {"x"}));
  CHECK(initial_ideal(P, WeightVector{-1, -1}) == polys(R, {"1"}));
  CHECK(initial_ideal(P, WeightVector{-1, 0}) == polys(R, {"y + 1"}));
}

TEST_CASE("both initial ideal routes agree on nonnegative weights") {
  const auto P = pres("ring x y z; ideal x^2 - y, x^3 - z;");
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> wd(0, 4);
  for (int i = 0; i < 40; ++i) {
    const WeightVector w{wd(rng), wd(rng), wd(rng)};
    CHECK(canonical_basis(P.ring, initial_ideal_direct(P, w)) ==
          initial_ideal_homogenized(P, w));
  }
  CHECK_THROWS_AS(initial_ideal_direct(P, WeightVector{-1, 0, 0}), Error);
}

TEST_CASE("negative weights through homogenization") {
  const auto P = pres("ring x y z; ideal x^2 - y, x^3 - z;");
  // w = (-1, 0, 2): y and z dominate their generators.
  CHECK(initial_ideal(P, WeightVector{-1, 0, 2}) == polys(P.ring, {"y", "z"}));
  // w = (-1, -2, -3): every term of each generator has the same weight.
  CHECK(initial_ideal(P, WeightVector{-1, -2, -3}) ==
        canonical_basis(P.ring, P.ideal_gens));
}

TEST_CASE("contains_monomial") {
  const Ring R = parse_ring("ring x y;");
  auto m = contains_monomial(polys(R, {"x"}), R);
  CHECK(m.contains);
  REQUIRE(m.witness);
  CHECK(*m.witness == ExponentVector{1, 0});
  CHECK_FALSE(contains_monomial(polys(R, {"x + y"}), R).contains);
  // <x + y, y + 1> = <x - 1, y + 1> is a point of the torus.
  CHECK_FALSE(contains_monomial(polys(R, {"x + y", "y + 1"}), R).contains);
  m = contains_monomial(polys(R, {"x^2*y + x*y^2", "x*y^2"}), R);
  CHECK(m.contains);
  REQUIRE(m.witness);
  CHECK(*m.witness == ExponentVector{2, 1});
  CHECK(contains_monomial(polys(R, {"1"}), R).contains);
  CHECK_FALSE(contains_monomial({}, R).contains);
}

TEST_CASE("same_initial_ideal") {
  const auto P = pres("ring x y; ideal x + y + 1;");
  CHECK(same_initial_ideal(P, WeightVector{3, 1}, WeightVector{3, 1}));
  CHECK(same_initial_ideal(P, WeightVector{1, 1}, WeightVector{2, 2}));
  CHECK_FALSE(same_initial_ideal(P, WeightVector{0, 0}, WeightVector{1, 0}));
}

TEST_CASE("enumerate_fan") {
  const auto line = enumerate_fan(pres("ring x y; ideal x + y + 1;"), 1, 1);
  CHECK(line.size() == 7);
  std::vector<WeightVector> tropical;
  for (const auto& c : line)
    if (c.monomial_free) tropical.push_back(c.representative);
  CHECK(tropical == std::vector<WeightVector>{{-1, 0}, {0, -1}, {0, 0}, {1, 1}});
  std::size_t members = 0;
  for (const auto& c : line) members += c.members;
  CHECK(members == 9);

  const auto free = enumerate_fan(pres("ring x y;"), 1, 1);
  REQUIRE(free.size() == 1);
  CHECK(free[0].members == 9);
  CHECK(free[0].monomial_free);

  // <x - y>: the sign of w1 - w2 decides the initial ideal.
  const auto diag = enumerate_fan(pres("ring x y; ideal x - y;"), 1, 1);
  REQUIRE(diag.size() == 3);
  for (const auto& c : diag) {
    const Rational s = c.representative[0] - c.representative[1];
    CHECK(c.monomial_free == (s == 0));
  }
}
