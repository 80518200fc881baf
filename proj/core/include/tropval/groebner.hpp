#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tropval/monomial.hpp"
#include "tropval/polynomial.hpp"
#include "tropval/presentation.hpp"

namespace tropval {

enum class TieBreak { Grevlex, Lex };

/// Weight order refined by a tie-break: compare w·a first, then the tie-break.
/// Weights are rescaled to integers once so comparisons stay cheap.
class MonomialOrder {
 public:
  /// Pure tie-break order on n variables.
  explicit MonomialOrder(std::size_t n, TieBreak tie = TieBreak::Grevlex);
  MonomialOrder(WeightVector primary, TieBreak tie = TieBreak::Grevlex);

  static MonomialOrder grevlex(std::size_t n) { return MonomialOrder(n, TieBreak::Grevlex); }
  static MonomialOrder lex(std::size_t n) { return MonomialOrder(n, TieBreak::Lex); }

  std::size_t size() const noexcept { return primary_.size(); }
  const WeightVector& primary() const noexcept { return primary_; }
  TieBreak tie_break() const noexcept { return tie_; }

  /// Nonnegative primary weights make the refined order a well-order.
  bool is_well_order() const noexcept { return well_order_; }

  /// Throws DimensionMismatch.
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.primary_ == b.primary_ && a.tie_ == b.tie_;
  }

 private:
  WeightVector primary_;
  std::vector<std::int64_t> scaled_;
  TieBreak tie_;
  bool well_order_ = true;
};

ExponentVector leading_monomial(const Polynomial& f, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order);
/// Terms of f sorted from the largest monomial down.
std::vector<std::pair<ExponentVector, Rational>> sorted_terms(const Polynomial& f,
                                                              const MonomialOrder& order);

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool reduced = false;
  std::vector<ExponentVector> leading;  // leading[i] = LM(gens[i])

  bool is_unit() const;
  bool is_zero_ideal() const { return gens.empty(); }
};

/// Reduction work budget. Zero means "unbounded", which is only allowed for
/// well-orders; orders with negative weights always get a finite budget.
struct ReductionLimits {
  std::size_t max_steps = 0;
};

inline constexpr std::size_t kDefaultStepCap = 20000;

/// Full remainder of multivariate division by G. Throws NonTermination when
/// the step budget runs out.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, ReductionLimits limits = {});

/// Reduced, monic, sorted Gröbner basis (normal selection strategy on lcm,
/// product and chain criteria).
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order, ReductionLimits limits = {});
/// Convenience overload; gens must be nonempty.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Sum of the terms of f of maximal weight under cv.apply(w). Throws
/// ZeroPolynomial, DimensionMismatch.
Polynomial initial_form(const Polynomial& f, const WeightVector& w,
                        const CoeffValuation& cv = CoeffValuation::trivial());

/// Max of w·e over the support of f; f must be nonzero.
Rational max_weight(const Polynomial& f, const WeightVector& w);

/// Homogenizes f in `target`, whose last variable is the homogenizing one.
Polynomial homogenize(const Polynomial& f, const Ring& target);
/// Sets the last variable of f's ring to 1 and drops it.
Polynomial dehomogenize(const Polynomial& f, const Ring& target);

}  // namespace tropval

namespace tropval {

/// Exponent vectors of total degree d in n variables, x_1^d first (lex descending).
std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d);

}  // namespace tropval
