#pragma once

#include <vector>

#include "tropval/graded.hpp"
#include "tropval/groebner.hpp"

namespace tropval {

/// Q[x, y] graded by degree: A_n has basis x^(n-k) y^k (index k), n <= N.
GradedAlgebra sl2_rep_ring(int N);

/// The six-generator ring x1 x2 x3 z12 z13 z23 with the straightening
/// relation x1*z23 - x2*z13 + x3*z12 = 0, leading term x2*z13.
struct Sl2TripleRing {
  Ring ring;
  GroebnerBasis basis;

  Sl2TripleRing();
  /// (a, b, eta, c, lambda) of a monomial.
  Grade grade(const ExponentVector& e) const;
  bool is_normal(const ExponentVector& e) const;
  Polynomial normal_form(const Polynomial& f) const;
};

/// Grade coordinates of the branching algebra.
enum Sl2Coord : std::size_t { kA = 0, kB = 1, kEta = 2, kC = 3, kLambda = 4 };

/// Normal monomials of total degree <= N graded by (a, b, eta, c, lambda);
/// truncation degree (a + b + c + lambda)/2, which is the total degree.
GradedAlgebra sl2_branching_algebra(int N);

/// Grade step of one positive root: eta raised by 2, outer weights fixed.
Grade sl2_positive_root();

struct RootFunctional {
  LexFunctional functional;
  bool nonnegative = false;  // h(root) >= 0 lexicographically
  bool strict = false;       // h(root) > 0 lexicographically
};

/// One row per stage, each over (a, b, eta, c, lambda).
RootFunctional root_functional(const std::vector<std::vector<Rational>>& stages);

/// Zeroes one stage (row) and re-runs the report. Throws IndexOutOfRange.
RootFunctional collapse_functional(const LexFunctional& h, std::size_t stage_index);

}  // namespace tropval
