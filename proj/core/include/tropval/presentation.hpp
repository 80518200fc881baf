#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropval/monomial.hpp"
#include "tropval/polynomial.hpp"

namespace tropval {

/// Valuation on the coefficient field. A nontrivial one is encoded by a ring
/// variable reserved as uniformizer t whose value v(t) is fixed.
struct CoeffValuation {
  struct Trivial {};
  struct TAdic {
    std::size_t t_index = 0;
    Rational t_weight;  // the value v(t) assigned to the uniformizer
  };

  static CoeffValuation trivial() { return CoeffValuation{}; }
  static CoeffValuation t_adic(std::size_t index, Rational weight) {
    CoeffValuation cv;
    cv.tadic = TAdic{index, std::move(weight)};
    return cv;
  }

  bool is_trivial() const noexcept { return !tadic.has_value(); }

  /// w with the uniformizer coordinate replaced by its fixed weight.
  WeightVector apply(const WeightVector& w) const;

  std::string to_string(const RingContext& ring) const;

  std::optional<TAdic> tadic;
};

/// An algebra A = Q[X]/I given by generators and ideal generators.
struct Presentation {
  Ring ring;
  std::vector<Polynomial> ideal_gens;
  CoeffValuation coeff_valuation;

  Presentation() = default;
  /// Throws ZeroPolynomial if a generator is zero, RingMismatch, IndexOutOfRange for t.
  Presentation(Ring ring, std::vector<Polynomial> gens,
               CoeffValuation cv = CoeffValuation::trivial());

  std::size_t dimension() const { return ring->size(); }
  bool is_free() const noexcept { return ideal_gens.empty(); }

  /// Effective weight: checks length and applies the coefficient valuation.
  WeightVector effective_weight(const WeightVector& w) const;

  /// Text form accepted by parse_presentation.
  std::string to_string() const;
};

}  // namespace tropval
