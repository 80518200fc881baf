#include <doctest.h>

#include <random>

#include "tropval/error.hpp"
#include "tropval/tropical.hpp"

using namespace tropval;

namespace {

TropicalValue q(long p, long d = 1) { return TropicalValue(make_rational(p, d)); }

TropicalValue random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), bottom(0, 9);
  if (bottom(rng) == 0) return TropicalValue::bottom();
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("trop_add picks the larger value") {
  CHECK(trop_add(q(3), q(5)) == q(5));
  CHECK(trop_add(TropicalValue::bottom(), q(2)) == q(2));
  CHECK(trop_add(q(7, 2), q(7, 2)) == q(7, 2));
}

TEST_CASE("trop_mul adds and bottom absorbs") {
  CHECK(trop_mul(q(3), q(5)) == q(8));
  CHECK(trop_mul(TropicalValue::bottom(), q(5)).is_bottom());
  CHECK(trop_mul(q(-1, 2), q(1, 2)) == q(0));
}

TEST_CASE("monomial_weight") {
  CHECK(monomial_weight(WeightVector{1, 2}, ExponentVector{3, 1}, q(0)) == q(5));
  CHECK(monomial_weight(WeightVector{0, 0}, ExponentVector{9, 9}, q(0)) == q(0));
  CHECK(monomial_weight(WeightVector{1, 1}, ExponentVector{2, 0}, TropicalValue::bottom())
            .is_bottom());
  CHECK_THROWS_AS(monomial_weight(WeightVector{1}, ExponentVector{1, 1}, q(0)), Error);
}

TEST_CASE("bottom is the least element") {
  const TropicalValue b;
  CHECK(b.is_bottom());
  CHECK(b < q(-1000));
  CHECK(b == TropicalValue::bottom());
  CHECK_FALSE(b < b);
}

TEST_CASE("text round trip") {
  for (const char* text : {"-inf", "0", "7/3", "-5/2", "12"}) {
    CHECK(TropicalValue::parse(text).to_string() == text);
  }
  CHECK(TropicalValue::parse("4/2") == q(2));
  CHECK_THROWS_AS(TropicalValue::parse("x"), Error);
  CHECK_THROWS_AS(TropicalValue::parse("1/0"), Error);
}

TEST_CASE("semiring axioms on sampled triples") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    CHECK(trop_add(a, a) == a);
    CHECK(trop_add(TropicalValue::bottom(), a) == a);
    CHECK(trop_mul(TropicalValue::bottom(), a).is_bottom());
    CHECK(trop_mul(q(0), a) == a);
  }
}
