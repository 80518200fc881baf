#include <doctest.h>

#include "tropval/cones.hpp"
#include "tropval/error.hpp"
#include "tropval/initial.hpp"
#include "tropval/parser.hpp"
#include "tropval/sampling.hpp"

using namespace tropval;

namespace {

Presentation pres(const char* text) { return parse_presentation(text).presentation; }

CandidateValuation vw(const Presentation& P, const WeightVector& w) {
  return make_weight_valuation(P, w);
}

}  // namespace

TEST_CASE("implies on the free plane") {
  const auto P = pres("ring x y;");
  const auto diag = implies_check(vw(P, {1, 1}), vw(P, {2, 2}), 7, 100, true);
  CHECK(diag.status == RelationStatus::HoldsCertified);

  const auto refuted = implies_check(vw(P, {2, 1}), vw(P, {1, 0}), 7, 100, true);
  CHECK(refuted.status == RelationStatus::Refuted);
  REQUIRE(refuted.witness_a);
  REQUIRE(refuted.witness_b);
  CHECK(refuted.witness_a->to_string() == "x");
  CHECK(refuted.witness_b->to_string() == "y^2");

  const auto same = implies_check(vw(P, {3, -1}), vw(P, {3, -1}), 7, 100, true);
  CHECK(same.status == RelationStatus::HoldsCertified);
}

TEST_CASE("refuting pairs really refute") {
  const auto P = pres("ring x y z;");
  const std::vector<WeightVector> ws = {{1, 0, 2}, {2, 1, 1}, {0, 1, 0}, {1, 1, 1}, {3, 1, 2}};
  for (const auto& a : ws)
    for (const auto& b : ws) {
      const auto v = vw(P, a), w = vw(P, b);
      const auto r = implies_check(v, w, 7, 100, true);
      if (!r.refuted()) continue;
      REQUIRE(r.witness_a);
      REQUIRE(r.witness_b);
      CHECK(v.evaluate(*r.witness_a) <= v.evaluate(*r.witness_b));
      CHECK(w.evaluate(*r.witness_a) > w.evaluate(*r.witness_b));
    }
}

TEST_CASE("implies is reflexive and transitive where certified") {
  const auto P = pres("ring x y; ideal x + y + 1;");
  std::vector<WeightVector> ws;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) ws.push_back({a, b});
  ws.push_back({2, 4});
  std::vector<CandidateValuation> vs;
  for (const auto& w : ws) vs.push_back(vw(P, w));
  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> cert(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cert[i][j] = implies_check(vs[i], vs[j], 7, 80, true).status == RelationStatus::HoldsCertified;
  for (std::size_t i = 0; i < n; ++i) CHECK(cert[i][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (cert[i][j] && cert[j][k])
          CHECK(implies_check(vs[i], vs[k], 7, 80, true).status != RelationStatus::Refuted);
}

TEST_CASE("cone sums") {
  const auto F = pres("ring x y;");
  const auto s = cone_sum(vw(F, {1, 1}), vw(F, {2, 2}), vw(F, {3, 3}), 7, 150);
  CHECK(tropicalize(s.sum) == WeightVector{5, 5});
  CHECK(s.axioms.verdict == AxiomVerdict::Valuation);
  CHECK_FALSE(s.implies.refuted());

  const auto v = vw(F, {2, 1});
  const auto twice = cone_sum(v, v, v, 7, 100);
  CHECK(tropicalize(twice.sum) == WeightVector{4, 2});
  CHECK(twice.implies.status == RelationStatus::HoldsCertified);

  const auto L = pres("ring x y; ideal x + y + 1;");
  const auto q = cone_sum(vw(L, {1, 1}), vw(L, {1, 1}), vw(L, {2, 2}), 7, 150);
  CHECK(tropicalize(q.sum) == WeightVector{3, 3});
  CHECK(q.axioms.verdict == AxiomVerdict::Valuation);
  CHECK_FALSE(q.implies.refuted());

  try {
    cone_sum(vw(F, {2, 1}), vw(F, {1, 0}), vw(F, {1, 1}), 7, 100);
    FAIL("expected HypothesisFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFails);
  }
}

TEST_CASE("sums of tabulated valuations add pointwise") {
  const auto A = pres("ring x y; ideal x*y - 1;");
  const auto v = vw(A, {1, -1});
  const auto line = pres("ring u;");
  const auto back = pullback({parse_poly(A.ring, "x + 1")}, v, line);
  const auto sum = add_valuations(back, back);
  CHECK(sum.kind() == ValuationKind::Tabulated);
  SampleRng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_polynomial(rng, line.ring, 3, 4);
    CHECK(sum.evaluate(f) == trop_mul(back.evaluate(f), back.evaluate(f)));
  }
}

TEST_CASE("scaling") {
  const auto L = pres("ring x y; ideal x + y + 1;");
  const auto v = vw(L, {1, 0});
  const auto v3 = scale(v, Rational(3));
  CHECK(v3.weight() == WeightVector{3, 0});
  CHECK(same_initial_ideal(L, v.weight(), v3.weight()));
  CHECK(scale(v, Rational(1)).weight() == v.weight());

  const auto T = pres("ring t;");
  const auto half = scale(vw(T, {2}), Rational(1, 2));
  CHECK(half.evaluate(parse_poly(T.ring, "t^5 + 3*t")) == TropicalValue(5));

  CHECK_THROWS_AS(scale(v, Rational(0)), Error);
  CHECK_THROWS_AS(scale(v, Rational(-1)), Error);
}

TEST_CASE("arrow relation") {
  const auto L = pres("ring x y; ideal x + y + 1;");
  CHECK(arrow_check(L, WeightVector{1, 2}, WeightVector{1, 2}).status ==
        RelationStatus::HoldsCertified);
  CHECK(arrow_check(L, WeightVector{2, 2}, WeightVector{1, 1}).status ==
        RelationStatus::HoldsCertified);
  CHECK(arrow_check(L, WeightVector{1, 0}, WeightVector{1, 1}).status ==
        RelationStatus::HoldsCertified);
  const auto r = arrow_check(L, WeightVector{1, 0}, WeightVector{0, 1});
  CHECK(r.status == RelationStatus::Refuted);
  REQUIRE(r.witness_a);
  CHECK(r.witness_a->to_string() == "y");
}

TEST_CASE("certified implication gives an arrow") {
  for (const char* text : {"ring x y;", "ring x y; ideal x + y + 1;", "ring x y; ideal x*y - 1;"}) {
    const auto P = pres(text);
    std::vector<WeightVector> ws;
    for (int a = -1; a <= 2; ++a)
      for (int b = -1; b <= 2; ++b)
        if (a >= 0 && b >= 0) ws.push_back({a, b});
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto v = vw(P, a), w = vw(P, b);
        if (implies_check(v, w, 7, 50, true).status != RelationStatus::HoldsCertified) continue;
        CHECK_FALSE(arrow_check(P, v, w).refuted());
      }
  }
}

TEST_CASE("facet classes") {
  const auto L = pres("ring x y; ideal x + y + 1;");
  auto c = facet_classes(L, {{1, 1}, {2, 2}});
  REQUIRE(c.size() == 1);
  CHECK(c[0].members == std::vector<std::size_t>{0, 1});
  CHECK(facet_classes(L, {{0, 0}, {1, 0}}).size() == 2);
  CHECK(facet_classes(L, {}).empty());
  for (const WeightVector& w : {WeightVector{1, 0}, WeightVector{-1, 2}, WeightVector{3, 3}})
    for (const Rational& R : {Rational(1, 2), Rational(3), Rational(7, 5)})
      CHECK(facet_classes(L, {w, w * R}).size() == 1);
}
