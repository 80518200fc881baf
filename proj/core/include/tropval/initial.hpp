#pragma once

#include <optional>
#include <vector>

#include "tropval/groebner.hpp"
#include "tropval/presentation.hpp"

namespace tropval {

/// Reduced grevlex Gröbner basis; the canonical name of an ideal.
std::vector<Polynomial> canonical_basis(const Ring& ring, const std::vector<Polynomial>& gens);

/// Generators of in_w(I) in canonical form. The coefficient valuation of P is
/// applied to w first. Nonnegative weights go through a w-refined basis
/// directly; weights with negative entries go through homogenization.
std::vector<Polynomial> initial_ideal(const Presentation& P, const WeightVector& w);

/// Initial forms of the w-refined reduced basis (not canonicalized).
/// Requires the effective weight to be nonnegative (UnsupportedOrder otherwise).
std::vector<Polynomial> initial_ideal_direct(const Presentation& P, const WeightVector& w);

/// Canonical in_w(I) via the homogenized ideal; valid for every w.
std::vector<Polynomial> initial_ideal_homogenized(const Presentation& P, const WeightVector& w);

struct MonomialContainment {
  bool contains = false;
  std::optional<ExponentVector> witness;
};

/// Decides whether <gens> contains a monomial, by saturating with the product
/// of all variables. The witness is a smallest-degree monomial found by search,
/// falling back to a power of the variable product.
MonomialContainment contains_monomial(const std::vector<Polynomial>& gens, const Ring& ring);

bool same_initial_ideal(const Presentation& P, const WeightVector& w1, const WeightVector& w2);

struct FanClass {
  WeightVector representative;
  std::vector<Polynomial> initial_ideal;
  bool monomial_free = false;
  std::size_t members = 0;
};

/// Groups the grid {k/d : |k| <= B d}^n by initial ideal. Classes are sorted
/// by representative, which is the lexicographically smallest member.
std::vector<FanClass> enumerate_fan(const Presentation& P, int box, int denominator);

}  // namespace tropval
