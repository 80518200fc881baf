#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tropval/monomial.hpp"
#include "tropval/rational.hpp"

namespace tropval {

/// Element of Q ∪ {-inf} in the (max, +) semiring. Bottom is -inf.
class TropicalValue {
 public:
  /// Bottom.
  TropicalValue() = default;
  TropicalValue(const Rational& r) : value_(r) {}  // NOLINT: implicit by intent
  TropicalValue(long v) : value_(Rational(v)) {}   // NOLINT

  static TropicalValue bottom() { return TropicalValue(); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  /// Bottom is the least element; bottom == bottom.
  friend bool operator==(const TropicalValue& a, const TropicalValue& b);
  friend bool operator<(const TropicalValue& a, const TropicalValue& b);
  friend bool operator<=(const TropicalValue& a, const TropicalValue& b) { return !(b < a); }
  friend bool operator>(const TropicalValue& a, const TropicalValue& b) { return b < a; }
  friend bool operator>=(const TropicalValue& a, const TropicalValue& b) { return !(a < b); }

  /// "p/q", "p" or "-inf".
  std::string to_string() const;
  static TropicalValue parse(std::string_view text);

 private:
  std::optional<Rational> value_;
};

/// a ⊕ b = max(a, b).
TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b);
/// a ⊗ b = a + b, bottom absorbing.
TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b);

/// coeff_val ⊗ Σ w_i e_i. Throws DimensionMismatch.
TropicalValue monomial_weight(const WeightVector& w, const ExponentVector& e,
                              const TropicalValue& coeff_val);

}  // namespace tropval
